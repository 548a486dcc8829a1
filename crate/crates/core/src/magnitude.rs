//! Magnitudes `M_k = {s : val(s) >= k}` and their extended integer indices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::series::Valuation;

/// Extended integer `k ∈ ℤ ∪ {−∞, +∞}` indexing a magnitude.
///
/// The derived order is the natural one: `NegInf < Finite(_) < PosInf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagIndex {
    NegInf,
    Finite(i64),
    PosInf,
}

impl MagIndex {
    pub fn finite(self) -> Option<i64> {
        match self {
            MagIndex::Finite(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, MagIndex::Finite(_))
    }
}

impl From<i64> for MagIndex {
    fn from(k: i64) -> Self {
        MagIndex::Finite(k)
    }
}

impl From<Valuation> for MagIndex {
    fn from(v: Valuation) -> Self {
        match v {
            Valuation::Finite(k) => MagIndex::Finite(k),
            Valuation::Infinite => MagIndex::PosInf,
        }
    }
}

/// Extended addition. `+∞` absorbs everything, including `−∞`, so that the
/// product of the zero magnitude with the maximal one is zero.
impl Add for MagIndex {
    type Output = MagIndex;

    fn add(self, rhs: MagIndex) -> MagIndex {
        use MagIndex::*;
        match (self, rhs) {
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
            (Finite(a), Finite(b)) => Finite(a.checked_add(b).expect("magnitude index overflow")),
        }
    }
}

impl Add<Valuation> for MagIndex {
    type Output = MagIndex;

    fn add(self, rhs: Valuation) -> MagIndex {
        self + MagIndex::from(rhs)
    }
}

impl fmt::Display for MagIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagIndex::NegInf => f.write_str("-inf"),
            MagIndex::Finite(k) => write!(f, "{k}"),
            MagIndex::PosInf => f.write_str("+inf"),
        }
    }
}

/// A magnitude (neutrix) `M_k`.
///
/// `M_{+∞} = {0}` is the zero of the solid and `M_{−∞}` is the maximal
/// magnitude. Magnitudes are ordered by inclusion, so a *larger* index is a
/// *smaller* magnitude.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Magnitude {
    index: MagIndex,
}

impl Magnitude {
    /// The zero magnitude `{0}`.
    pub const ZERO: Magnitude = Magnitude {
        index: MagIndex::PosInf,
    };
    /// The maximal magnitude, containing every scalar.
    pub const MAX: Magnitude = Magnitude {
        index: MagIndex::NegInf,
    };

    pub fn new(k: i64) -> Self {
        Magnitude {
            index: MagIndex::Finite(k),
        }
    }

    pub fn from_index(index: MagIndex) -> Self {
        Magnitude { index }
    }

    pub fn index(self) -> MagIndex {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == MagIndex::PosInf
    }

    pub fn is_max(self) -> bool {
        self.index == MagIndex::NegInf
    }

    /// `true` when the magnitude contains the scalar of valuation `v`.
    pub fn absorbs(self, v: Valuation) -> bool {
        MagIndex::from(v) >= self.index
    }
}

/// Magnitude sum: the wider of the two (absorption).
impl Add for Magnitude {
    type Output = Magnitude;

    fn add(self, rhs: Magnitude) -> Magnitude {
        Magnitude {
            index: self.index.min(rhs.index),
        }
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Inclusion order: `M_j <= M_k` iff `j >= k`.
impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        other.index.cmp(&self.index)
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            MagIndex::PosInf => f.write_str("0"),
            MagIndex::NegInf => f.write_str("Mmax"),
            MagIndex::Finite(k) => write!(f, "M({k})"),
        }
    }
}
