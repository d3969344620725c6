//! Group family tags shared by the slot calculus, the block formulas and the
//! report layer.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The family of a finite classical group, fixing which `k(B)` formula and
/// which defect formula apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "GU")]
    Gu,
    /// Any `SL_n(q) ≤ G ≤ GL_n(q)`, principal block.
    #[serde(rename = "SLrange")]
    SlRange,
    /// Any `SU_n(q) ≤ G ≤ GU_n(q)`, principal block.
    #[serde(rename = "SUrange")]
    SuRange,
    /// `PSL_ℓ(q)`, principal block.
    #[serde(rename = "PSLell")]
    PslEll,
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "SOodd")]
    SoOdd,
    #[serde(rename = "SOevenPlus")]
    SoEvenPlus,
    #[serde(rename = "SOevenMinus")]
    SoEvenMinus,
    #[serde(rename = "GOevenPlus")]
    GoEvenPlus,
    #[serde(rename = "GOevenMinus")]
    GoEvenMinus,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 11] = [
        GroupFamily::Gl,
        GroupFamily::Gu,
        GroupFamily::SlRange,
        GroupFamily::SuRange,
        GroupFamily::PslEll,
        GroupFamily::Sp,
        GroupFamily::SoOdd,
        GroupFamily::SoEvenPlus,
        GroupFamily::SoEvenMinus,
        GroupFamily::GoEvenPlus,
        GroupFamily::GoEvenMinus,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            GroupFamily::Gl => "GL",
            GroupFamily::Gu => "GU",
            GroupFamily::SlRange => "SLrange",
            GroupFamily::SuRange => "SUrange",
            GroupFamily::PslEll => "PSLell",
            GroupFamily::Sp => "Sp",
            GroupFamily::SoOdd => "SOodd",
            GroupFamily::SoEvenPlus => "SOevenPlus",
            GroupFamily::SoEvenMinus => "SOevenMinus",
            GroupFamily::GoEvenPlus => "GOevenPlus",
            GroupFamily::GoEvenMinus => "GOevenMinus",
        }
    }

    /// `GL`/`GU`: slots are counted modulo `d`, relative Weyl group `G(d,1,w)`.
    pub fn is_linear_type(self) -> bool {
        matches!(self, GroupFamily::Gl | GroupFamily::Gu)
    }

    /// Symplectic and orthogonal families: slots are counted modulo `2d'`
    /// and the relative Weyl group is `G(2d',1,w)`.
    pub fn is_bc_type(self) -> bool {
        matches!(
            self,
            GroupFamily::Sp
                | GroupFamily::SoOdd
                | GroupFamily::SoEvenPlus
                | GroupFamily::SoEvenMinus
                | GroupFamily::GoEvenPlus
                | GroupFamily::GoEvenMinus
        )
    }

    pub fn is_even_orthogonal(self) -> bool {
        matches!(
            self,
            GroupFamily::SoEvenPlus
                | GroupFamily::SoEvenMinus
                | GroupFamily::GoEvenPlus
                | GroupFamily::GoEvenMinus
        )
    }

    /// Principal-block families between `SL_n` and `GL_n` (or their unitary and
    /// projective variants).
    pub fn is_principal_only(self) -> bool {
        matches!(
            self,
            GroupFamily::SlRange | GroupFamily::SuRange | GroupFamily::PslEll
        )
    }

    /// Families whose field parameter is `-q` rather than `q`.
    pub fn is_unitary(self) -> bool {
        matches!(self, GroupFamily::Gu | GroupFamily::SuRange)
    }

    /// Smallest admissible rank parameter.
    pub fn min_rank(self) -> u64 {
        if self.is_even_orthogonal() {
            4
        } else {
            1
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let family = match s.trim() {
            "GL" => GroupFamily::Gl,
            "GU" => GroupFamily::Gu,
            "SLrange" | "SL" => GroupFamily::SlRange,
            "SUrange" | "SU" => GroupFamily::SuRange,
            "PSLell" | "PSL" => GroupFamily::PslEll,
            "Sp" => GroupFamily::Sp,
            "SOodd" => GroupFamily::SoOdd,
            "SOevenPlus" | "SO+" => GroupFamily::SoEvenPlus,
            "SOevenMinus" | "SO-" => GroupFamily::SoEvenMinus,
            "GOevenPlus" | "GO+" => GroupFamily::GoEvenPlus,
            "GOevenMinus" | "GO-" => GroupFamily::GoEvenMinus,
            other => return Err(Error::UnknownLabel(other.to_string())),
        };
        Ok(family)
    }
}
