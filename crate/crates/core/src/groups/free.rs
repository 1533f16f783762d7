use std::cmp::Ordering;
use std::fmt;

use super::DiscreteGroup;
use crate::error::{Error, Result};

/// Largest supported rank: one lowercase letter per generator.
pub const MAX_RANK: usize = 26;

/// A generator or its inverse. Generator `i` prints as the `i`-th lowercase
/// letter, its inverse as the matching uppercase letter.
///
/// The derived order (`a < A < b < B < ...`) is the letter order used by
/// shortlex comparison of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    generator: u8,
    inverse: bool,
}

impl Letter {
    /// `generator` is zero-based.
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator < MAX_RANK, "generator index {generator} too large");
        Letter { generator: generator as u8, inverse }
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Letter::new(c as usize - 'a' as usize, false)),
            'A'..='Z' => Some(Letter::new(c as usize - 'A' as usize, true)),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.inverse { b'A' } else { b'a' };
        (base + self.generator) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Element of the free group of a given rank, stored in freely reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    rank: u8,
    letters: Vec<Letter>,
}

fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 || rank > MAX_RANK {
        return Err(Error::RankOutOfRange { rank, max: MAX_RANK });
    }
    Ok(())
}

/// Append `letter` to an already reduced stack, cancelling if needed.
fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    if stack.last() == Some(&letter.inverse()) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

impl ReducedWord {
    pub fn identity(rank: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&rank), "rank {rank} out of range");
        ReducedWord { rank: rank as u8, letters: Vec::new() }
    }

    /// Freely reduce an arbitrary letter sequence.
    pub fn reduce<I>(rank: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        check_rank(rank)?;
        let mut letters = Vec::new();
        for letter in raw {
            if letter.generator() >= rank {
                return Err(Error::GeneratorOutOfRange { index: letter.generator() + 1, rank });
            }
            push_reduced(&mut letters, letter);
        }
        Ok(ReducedWord { rank: rank as u8, letters })
    }

    /// Single-letter word.
    pub fn letter(rank: usize, letter: Letter) -> Result<Self> {
        Self::reduce(rank, [letter])
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &ReducedWord) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.reserve(other.letters.len());
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        ReducedWord { rank: self.rank, letters }
    }

    pub fn inverse(&self) -> ReducedWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        ReducedWord { rank: self.rank, letters }
    }

    /// `self` extended by one letter; `None` if that letter would cancel.
    pub fn extend(&self, letter: Letter) -> Option<ReducedWord> {
        if self.last() == Some(letter.inverse()) || letter.generator() >= self.rank() {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.push(letter);
        Some(ReducedWord { rank: self.rank, letters })
    }

    /// Word with the last letter removed; `None` for the identity.
    pub fn parent(&self) -> Option<ReducedWord> {
        if self.letters.is_empty() {
            return None;
        }
        let letters = self.letters[..self.letters.len() - 1].to_vec();
        Some(ReducedWord { rank: self.rank, letters })
    }

    pub fn prefix(&self, len: usize) -> ReducedWord {
        ReducedWord { rank: self.rank, letters: self.letters[..len].to_vec() }
    }

    pub fn has_prefix(&self, prefix: &ReducedWord) -> bool {
        self.letters.starts_with(&prefix.letters)
    }

    pub fn common_prefix_len(&self, other: &ReducedWord) -> usize {
        self.letters
            .iter()
            .zip(&other.letters)
            .take_while(|(a, b)| a == b)
            .count()
    }
}

/// Shortlex: shorter words first, then letter by letter.
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The free group of rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeGroup {
    rank: u8,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(FreeGroup { rank: rank as u8 })
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// All `2n` letters in letter order.
    pub fn alphabet(&self) -> impl Iterator<Item = Letter> {
        (0..self.rank()).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
    }

    /// Number of reduced words of length at most `radius`, or `None` on
    /// overflow.
    pub fn ball_size(&self, radius: usize) -> Option<u128> {
        let n = self.rank() as u128;
        if n == 1 {
            return (radius as u128).checked_mul(2)?.checked_add(1);
        }
        // 1 + 2n((2n-1)^R - 1)/(2n-2)
        let growth = (2 * n - 1).checked_pow(u32::try_from(radius).ok()?)?;
        let tail = (2 * n).checked_mul(growth - 1)? / (2 * n - 2);
        tail.checked_add(1)
    }

    /// Every reduced word of length at most `radius`, in shortlex order.
    /// Refuses when the ball would hold more than `cap` words.
    pub fn ball(&self, radius: usize, cap: u64) -> Result<Vec<ReducedWord>> {
        match self.ball_size(radius) {
            Some(size) if size <= cap as u128 => {}
            predicted => {
                return Err(Error::CapExceeded {
                    predicted: predicted.map_or_else(|| "overflow".to_string(), |s| s.to_string()),
                    cap,
                })
            }
        }
        let mut ball = vec![ReducedWord::identity(self.rank())];
        let mut frontier_start = 0;
        for _ in 0..radius {
            let frontier_end = ball.len();
            for i in frontier_start..frontier_end {
                for letter in self.alphabet() {
                    if let Some(w) = ball[i].extend(letter) {
                        ball.push(w);
                    }
                }
            }
            frontier_start = frontier_end;
        }
        Ok(ball)
    }
}

impl DiscreteGroup for FreeGroup {
    type Element = ReducedWord;

    fn identity(&self) -> ReducedWord {
        ReducedWord::identity(self.rank())
    }

    fn mul(&self, a: &ReducedWord, b: &ReducedWord) -> ReducedWord {
        debug_assert!(a.rank == self.rank && b.rank == self.rank);
        a.mul_unchecked(b)
    }

    fn inverse(&self, a: &ReducedWord) -> ReducedWord {
        a.inverse()
    }

    fn contains(&self, a: &ReducedWord) -> bool {
        a.rank == self.rank
    }

    fn is_identity(&self, a: &ReducedWord) -> bool {
        a.is_identity()
    }
}
