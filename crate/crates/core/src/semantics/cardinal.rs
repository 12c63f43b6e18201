use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A cardinal number: a natural number or an aleph.
///
/// The derived order puts every finite cardinal below every aleph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Finite(u64),
    Aleph(u32),
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Finite(0);
    pub const ONE: Cardinal = Cardinal::Finite(1);
    pub const ALEPH_0: Cardinal = Cardinal::Aleph(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Cardinal::Aleph(_))
    }

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    pub fn aleph_index(self) -> Option<u32> {
        match self {
            Cardinal::Aleph(k) => Some(k),
            Cardinal::Finite(_) => None,
        }
    }

    /// The least infinite cardinal strictly above `self`.
    pub fn successor(self) -> Cardinal {
        match self {
            Cardinal::Finite(_) => Cardinal::ALEPH_0,
            Cardinal::Aleph(k) => Cardinal::Aleph(k + 1),
        }
    }

    /// The `finite:n` / `aleph:k` tag used in serialized models.
    pub fn tag(self) -> String {
        match self {
            Cardinal::Finite(n) => format!("finite:{n}"),
            Cardinal::Aleph(k) => format!("aleph:{k}"),
        }
    }
}

impl Add for Cardinal {
    type Output = Cardinal;
    fn add(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a.saturating_add(b)),
            (a, b) => a.max(b),
        }
    }
}

impl Sum for Cardinal {
    fn sum<I: Iterator<Item = Cardinal>>(iter: I) -> Cardinal {
        iter.fold(Cardinal::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Cardinal> for Cardinal {
    fn sum<I: Iterator<Item = &'a Cardinal>>(iter: I) -> Cardinal {
        iter.copied().sum()
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(k) => write!(f, "ℵ{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad cardinal `{0}`: expected finite:N or aleph:K")]
pub struct CardinalParseError(String);

impl FromStr for Cardinal {
    type Err = CardinalParseError;
    fn from_str(s: &str) -> Result<Cardinal, CardinalParseError> {
        let err = || CardinalParseError(s.to_string());
        let (kind, n) = s.split_once(':').ok_or_else(err)?;
        match kind {
            "finite" => n.parse().map(Cardinal::Finite).map_err(|_| err()),
            "aleph" => n.parse().map(Cardinal::Aleph).map_err(|_| err()),
            _ => Err(err()),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.tag())
    }
}

impl<'de> Deserialize<'de> for Cardinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Cardinal, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
