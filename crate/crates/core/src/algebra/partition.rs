use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;

/// Non-increasing tuple of positive integers `λ_1 ≥ λ_2 ≥ ... ≥ λ_r ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, AlgebraError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with `m` parts.
    pub fn ones(m: u32) -> Self {
        Partition { parts: vec![1; m as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-indexed part `λ_j`.
    pub fn part(&self, j: usize) -> u32 {
        self.parts[j - 1]
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Parts pair up equal: `r` even and `λ_{2j} = λ_{2j-1}`. The empty partition is even.
    pub fn is_even(&self) -> bool {
        self.parts.len() % 2 == 0 && self.parts.chunks(2).all(|pair| pair[0] == pair[1])
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }
}

impl FromStr for Partition {
    type Err = AlgebraError;

    /// Accepts `"2,2,1"`, `"(2,2,1)"`, `""`, or `"()"`/`"empty"` for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() || body.eq_ignore_ascii_case("empty") {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| AlgebraError::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evenness() {
        assert!(Partition::empty().is_even());
        assert!(Partition::new(vec![1, 1]).unwrap().is_even());
        assert!(Partition::new(vec![3, 3, 1, 1]).unwrap().is_even());
        assert!(!Partition::new(vec![2, 1]).unwrap().is_even());
        assert!(!Partition::new(vec![2, 2, 1]).unwrap().is_even());
        assert!(!Partition::ones(5).is_even());
    }

    #[test]
    fn rejects_invalid() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn parses_and_displays() {
        let p: Partition = "(2,2,1)".parse().unwrap();
        assert_eq!(p.weight(), 5);
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "(2,2,1)");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap().weight(), 0);
    }
}
