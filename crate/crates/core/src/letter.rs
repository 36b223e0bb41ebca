//! The four letters of the rank-2 free group.
//!
//! Letters are stored as 2-bit codes (`a = 0`, `A = 1`, `b = 2`, `B = 3`) so
//! that inversion is a flip of the low bit. Ordering, however, follows the
//! canonical-rotation order `a < b < A < B`, exposed through [`Letter::rank`].

use std::cmp::Ordering;
use std::fmt;

/// One of `a`, `b`, `a⁻¹`, `b⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const A: Letter = Letter(0);
    pub const A_INV: Letter = Letter(1);
    pub const B: Letter = Letter(2);
    pub const B_INV: Letter = Letter(3);

    /// All letters in canonical order `a < b < A < B`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV];

    /// Builds a letter from a generator index (0 = a, 1 = b) and an inversion flag.
    pub fn new(generator: u8, inverted: bool) -> Letter {
        assert!(generator < 2, "rank-2 free group has generators 0 and 1");
        Letter(generator << 1 | inverted as u8)
    }

    #[inline]
    pub const fn from_code(code: u8) -> Letter {
        Letter(code & 3)
    }

    /// 2-bit storage code.
    #[inline]
    pub const fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn generator(self) -> u8 {
        self.0 >> 1
    }

    #[inline]
    pub const fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    /// +1 for a generator, -1 for an inverse.
    pub const fn sign(self) -> i8 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub const fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    #[inline]
    pub const fn cancels(self, next: Letter) -> bool {
        self.0 ^ next.0 == 1
    }

    /// Position in the order `a < b < A < B`.
    #[inline]
    pub const fn rank(self) -> u8 {
        // code: a=0 A=1 b=2 B=3  ->  rank: a=0 b=1 A=2 B=3
        (self.0 >> 1) | ((self.0 & 1) << 1)
    }

    #[inline]
    pub const fn from_rank(rank: u8) -> Letter {
        Letter(((rank & 1) << 1) | ((rank >> 1) & 1))
    }

    pub fn to_char(self) -> char {
        ['a', 'A', 'b', 'B'][self.0 as usize]
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::A_INV),
            'b' => Some(Letter::B),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_is_involution() {
        for x in Letter::ALL {
            assert_eq!(x.inverse().inverse(), x);
            assert_ne!(x.inverse(), x);
            assert!(x.cancels(x.inverse()));
        }
    }

    #[test]
    fn four_distinct_letters_in_canonical_order() {
        let ranks: Vec<u8> = Letter::ALL.iter().map(|l| l.rank()).collect();
        assert_eq!(ranks, vec![0, 1, 2, 3]);
        for r in 0..4 {
            assert_eq!(Letter::from_rank(r).rank(), r);
        }
        assert!(Letter::A < Letter::B && Letter::B < Letter::A_INV && Letter::A_INV < Letter::B_INV);
    }

    #[test]
    fn generator_and_sign() {
        assert_eq!(Letter::new(0, false), Letter::A);
        assert_eq!(Letter::new(1, true), Letter::B_INV);
        assert_eq!(Letter::B_INV.generator(), 1);
        assert_eq!(Letter::A_INV.sign(), -1);
        assert_eq!(Letter::B.sign(), 1);
    }

    #[test]
    fn char_round_trip() {
        for x in Letter::ALL {
            assert_eq!(Letter::from_char(x.to_char()), Some(x));
        }
        assert_eq!(Letter::from_char('c'), None);
    }
}
