//! Stable identifiers for the existence and non-existence results behind the
//! construction table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// What a result asserts about the configurations it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Exists,
    NotExists,
    /// Characterizations: exists for part of the hypothesis, not for the rest.
    Characterization,
}

macro_rules! theorem_tags {
    ($($variant:ident => $tag:literal, $claim:ident, $doc:literal;)*) => {
        /// A result from the theorem table. The string form is stable and
        /// appears in CLI output and in sweep caches.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremTag {
            $(#[doc = $doc] $variant,)*
        }

        impl TheoremTag {
            pub const ALL: &'static [TheoremTag] = &[$(TheoremTag::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremTag::$variant => $tag,)*
                }
            }

            pub fn claim(self) -> Claim {
                match self {
                    $(TheoremTag::$variant => Claim::$claim,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremTag::$variant => $doc,)*
                }
            }
        }

        impl FromStr for TheoremTag {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($tag => Ok(TheoremTag::$variant),)*
                    other => Err(format!("unknown theorem tag `{other}`")),
                }
            }
        }
    };
}

theorem_tags! {
    TreeNegBound => "tree.n_le_2", NotExists,
        "A signed tree with more than two negative edges is not additively graceful.";
    StarCase1 => "star.case1", Exists,
        "All-positive star: z = 0, v_i = i.";
    StarCase2 => "star.case2", Exists,
        "Star with one negative edge: z = 1, u_1 = 0, v_i = i + 1.";
    StarCase3 => "star.case3", Exists,
        "All-negative P3: (u_1, z, u_2) = (1, 0, 2).";
    StarTwoNegWithPositive => "star.n2_positive", NotExists,
        "A star with two negative edges and a positive edge is not additively graceful.";
    DsAllPositive => "ds.all_positive", Exists,
        "Every all-positive double star is additively graceful (it is graceful).";
    DsNegPendant => "ds.neg_pendant", Exists,
        "A double star with exactly one negative edge, a pendant one, is additively graceful.";
    DsNegBridge => "ds.negbridge", Characterization,
        "Negative bridge, positive pendants: additively graceful iff l = 0 or r = 0.";
    DsNegBridgeNegPendant => "ds.negbridge.negpendant", Characterization,
        "Negative bridge plus one negative pendant at z1: additively graceful iff l = 0.";
    Ds2NegRLt2 => "ds2neg.r_lt_2", NotExists,
        "Two negative pendants at z1, positive bridge: not additively graceful when r < 2.";
    Ds2NegR2 => "ds2neg.r2", Exists,
        "Two negative pendants at z1, positive bridge, r = 2: unique labeling.";
    Ds2NegL0RGt2 => "ds2neg.l0.r_gt_2", NotExists,
        "Two negative pendants at z1, positive bridge, l = 0: not additively graceful when r > 2.";
    Ds2NegLEqRMinus2 => "ds2neg.l_eq_r_minus_2", Exists,
        "Two negative pendants at z1, positive bridge: additively graceful when l = r - 2.";
    Ds2NegL1R4 => "ds2neg.l1.r4", Exists,
        "Two negative pendants at z1, positive bridge, l = 1, r = 4: a labeling exists (no closed formula).";
    Ds2NegL1RGe5 => "ds2neg.l1.rge5", NotExists,
        "Two negative pendants at z1, positive bridge, l = 1: not additively graceful when r >= 5.";
    Ds2NegLOddR3 => "ds2neg.l_odd.r3", NotExists,
        "Two negative pendants at z1, positive bridge, r = 3: not additively graceful for odd l >= 3.";
    Ds2NegL3ROdd => "ds2neg.l3.r_odd_ge7", NotExists,
        "Two negative pendants at z1, positive bridge, l = 3: not additively graceful for odd r >= 7.";
    Ds2NegL2 => "ds2neg.l2", Exists,
        "Two negative pendants at z1, positive bridge, l = 2: additively graceful for every r >= 2.";
    Ds2NegLEven => "ds2neg.l_even", Exists,
        "Two negative pendants at z1, positive bridge: additively graceful when l, r >= 2 and l is even.";
    Ds2NegREven => "ds2neg.r_even", Exists,
        "Two negative pendants at z1, positive bridge: additively graceful when l, r >= 2 and r is even.";
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremTag {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
