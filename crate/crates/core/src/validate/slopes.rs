use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// A line direction: `Finite(p, q)` is the slope `p / q` in lowest terms with `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(i64, i64),
    Vertical,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Slope {
        if q == 0 {
            return Slope::Vertical;
        }
        let g = p.gcd(&q);
        let sign = q.signum();
        Slope::Finite(sign * p / g, sign * q / g)
    }

    pub fn of_direction((dx, dy): (i64, i64)) -> Slope {
        Slope::new(dy, dx)
    }

    pub fn perpendicular(self) -> Slope {
        match self {
            Slope::Vertical => Slope::Finite(0, 1),
            Slope::Finite(0, _) => Slope::Vertical,
            Slope::Finite(p, q) => Slope::new(-q, p),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Vertical => write!(f, "inf"),
            Slope::Finite(p, 1) => write!(f, "{p}"),
            Slope::Finite(p, q) => write!(f, "{p}/{q}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid slope `{0}`")]
pub struct SlopeParseError(pub String);

/// A set of slopes that always contains the horizontal one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeSet {
    slopes: BTreeSet<Slope>,
}

impl SlopeSet {
    pub fn horizontal() -> Self {
        SlopeSet {
            slopes: [Slope::Finite(0, 1)].into_iter().collect(),
        }
    }

    pub fn from_slopes(list: impl IntoIterator<Item = Slope>) -> Self {
        let mut s = SlopeSet::horizontal();
        s.slopes.extend(list);
        s
    }

    /// Parses a `;`-separated list such as `0;1;-2/3`; `inf` denotes the vertical slope.
    pub fn parse(text: &str) -> Result<Self, SlopeParseError> {
        let mut list = Vec::new();
        for tok in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || SlopeParseError(tok.to_string());
            if tok == "inf" {
                list.push(Slope::Vertical);
                continue;
            }
            let (p, q) = match tok.split_once('/') {
                Some((p, q)) => (
                    p.trim().parse().map_err(|_| bad())?,
                    q.trim().parse().map_err(|_| bad())?,
                ),
                None => (tok.parse().map_err(|_| bad())?, 1),
            };
            if q == 0 {
                return Err(bad());
            }
            list.push(Slope::new(p, q));
        }
        Ok(SlopeSet::from_slopes(list))
    }

    /// Number of distinct slopes, counting the horizontal one.
    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Slope> {
        self.slopes.iter()
    }

    /// Whether a segment with this direction is parallel or perpendicular to a slope of the set.
    pub fn admits(&self, direction: (i64, i64)) -> bool {
        let s = Slope::of_direction(direction);
        self.slopes.contains(&s) || self.slopes.contains(&s.perpendicular())
    }
}
