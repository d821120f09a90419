use std::fmt;
use std::ops::Add;

/// An integer extended with a negative-infinity element.
///
/// `NegInf` absorbs addition and is dominated by every finite value, so
/// `max` over an empty family is `NegInf`. Variant order makes the derived
/// `Ord` agree with the numeric order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::NegInf => None,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::NegInf,
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: i64) -> ExtInt {
        self + ExtInt::Finite(rhs)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::NegInf => f.write_str("-inf"),
        }
    }
}
