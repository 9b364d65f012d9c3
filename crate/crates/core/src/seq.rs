//! Packing sequences: non-decreasing positive integers a_1 <= ... <= a_k.
//!
//! Vertices in class i must be pairwise at distance at least a_i + 1.
//! Text form is a comma list with optional exponents: "1,1,3,3" or "1,2^5"
//! (the latter expands to 1,2,2,2,2,2).

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("empty sequence")]
    Empty,
    #[error("sequence entries must be positive, got {0}")]
    Nonpositive(i64),
    #[error("sequence must be non-decreasing: {0} then {1}")]
    NotNondecreasing(u32, u32),
    #[error("malformed sequence token {0:?}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PackingSequence(Vec<u32>);

impl PackingSequence {
    pub fn new(values: Vec<u32>) -> Result<Self, SeqError> {
        if values.is_empty() {
            return Err(SeqError::Empty);
        }
        for &a in &values {
            if a == 0 {
                return Err(SeqError::Nonpositive(0));
            }
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(SeqError::NotNondecreasing(w[0], w[1]));
            }
        }
        Ok(PackingSequence(values))
    }

    /// Number of classes k.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// a_i for 1-based class index.
    pub fn bound(&self, class: u32) -> u32 {
        self.0[class as usize - 1]
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for PackingSequence {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(SeqError::Empty);
        }
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, reps) = match token.split_once('^') {
                Some((b, e)) => {
                    let reps: u64 = e
                        .trim()
                        .parse()
                        .map_err(|_| SeqError::Malformed(token.to_string()))?;
                    if reps == 0 {
                        return Err(SeqError::Malformed(token.to_string()));
                    }
                    (b.trim(), reps)
                }
                None => (token, 1),
            };
            let value: i64 = base
                .parse()
                .map_err(|_| SeqError::Malformed(token.to_string()))?;
            if value <= 0 {
                return Err(SeqError::Nonpositive(value));
            }
            for _ in 0..reps {
                values.push(value as u32);
            }
        }
        PackingSequence::new(values)
    }
}

impl fmt::Display for PackingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", self.0[i], j - i)?;
            } else {
                write!(f, "{}", self.0[i])?;
            }
            i = j;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_exponent_forms() {
        let s: PackingSequence = "1,1,3,3".parse().unwrap();
        assert_eq!(s.values(), &[1, 1, 3, 3]);
        let s: PackingSequence = "1,2^5".parse().unwrap();
        assert_eq!(s.values(), &[1, 2, 2, 2, 2, 2]);
        let s: PackingSequence = "1".parse().unwrap();
        assert_eq!(s.values(), &[1]);
        assert_eq!(s.bound(1), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!("".parse::<PackingSequence>(), Err(SeqError::Empty));
        assert_eq!(
            "2,1".parse::<PackingSequence>(),
            Err(SeqError::NotNondecreasing(2, 1))
        );
        assert_eq!("0,1".parse::<PackingSequence>(), Err(SeqError::Nonpositive(0)));
        assert_eq!(
            "-3".parse::<PackingSequence>(),
            Err(SeqError::Nonpositive(-3))
        );
        assert!(matches!(
            "1,2^0".parse::<PackingSequence>(),
            Err(SeqError::Malformed(_))
        ));
        assert!(matches!(
            "1,x".parse::<PackingSequence>(),
            Err(SeqError::Malformed(_))
        ));
    }

    #[test]
    fn display_compresses_runs() {
        let s: PackingSequence = "1,2,2,2,2,2".parse().unwrap();
        assert_eq!(s.to_string(), "1,2^5");
        let s: PackingSequence = "1,1,3,3".parse().unwrap();
        assert_eq!(s.to_string(), "1^2,3^2");
        // Round trip through display.
        let again: PackingSequence = s.to_string().parse().unwrap();
        assert_eq!(again, s);
    }
}
