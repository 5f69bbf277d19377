use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    /// Triangle strip with its last outer edge doubled.
    TriangleStrip,
    /// Hub joined to every vertex of an `n`-cycle.
    Wheel,
    /// `(n+1)`-cycle with one edge of multiplicity `n`.
    #[serde(rename = "cycle-multi")]
    CycleMultiEdge,
    /// 4-cycle with one edge of multiplicity 3; no size parameter.
    #[serde(rename = "counterexample")]
    CounterexampleC,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] =
        [FamilyId::TriangleStrip, FamilyId::Wheel, FamilyId::CycleMultiEdge, FamilyId::CounterexampleC];

    /// The three infinite families.
    pub const SWEEPABLE: [FamilyId; 3] = [FamilyId::TriangleStrip, FamilyId::Wheel, FamilyId::CycleMultiEdge];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::TriangleStrip => "triangle-strip",
            FamilyId::Wheel => "wheel",
            FamilyId::CycleMultiEdge => "cycle-multi",
            FamilyId::CounterexampleC => "counterexample",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            FamilyId::Wheel => 1,
            _ => 0,
        }
    }

    pub fn has_size(self) -> bool {
        self != FamilyId::CounterexampleC
    }

    pub fn check_n(self, n: usize) -> Result<()> {
        if self.has_size() && n < self.min_n() {
            return Err(Error::InvalidRange(format!("{self} needs n >= {}", self.min_n())));
        }
        Ok(())
    }

    /// Degree in `z` of the member of size `n`.
    pub fn z_degree(self, n: usize) -> usize {
        match self {
            FamilyId::TriangleStrip => n + 1,
            FamilyId::Wheel | FamilyId::CycleMultiEdge => n,
            FamilyId::CounterexampleC => 3,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangle-strip" | "strip" => Ok(FamilyId::TriangleStrip),
            "wheel" => Ok(FamilyId::Wheel),
            "cycle-multi" | "cycle" => Ok(FamilyId::CycleMultiEdge),
            "counterexample" | "c" => Ok(FamilyId::CounterexampleC),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?} (expected triangle-strip, wheel, cycle-multi or counterexample)"
            ))),
        }
    }
}
