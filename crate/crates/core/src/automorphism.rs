//! Automorphisms of the rank-2 free group given by generator images.
//!
//! Every automorphism of the rank-2 free group is induced by a homeomorphism
//! of the punctured torus, so self-intersection counts are invariant under
//! them even though combinatorial length is not.

use crate::letter::Letter;
use crate::word::{free_reduce, parse_letters, CyclicWord, ReducedWord};

/// Sends `a` and `b` to fixed reduced words; inverses go to inverse images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: [ReducedWord; 2],
}

impl Substitution {
    pub fn new(image_a: ReducedWord, image_b: ReducedWord) -> Substitution {
        Substitution { images: [image_a, image_b] }
    }

    fn from_text(a: &str, b: &str) -> Substitution {
        let r = |s: &str| free_reduce(parse_letters(s).expect("static word"));
        Substitution::new(r(a), r(b))
    }

    /// `a ↔ b`.
    pub fn swap() -> Substitution {
        Substitution::from_text("b", "a")
    }

    /// `a ↦ a⁻¹`, `b ↦ b`.
    pub fn invert_a() -> Substitution {
        Substitution::from_text("A", "b")
    }

    /// `a ↦ ab`, `b ↦ b`.
    pub fn transvection() -> Substitution {
        Substitution::from_text("ab", "b")
    }

    /// The three generators above, which generate the whole automorphism group.
    pub fn generators() -> [Substitution; 3] {
        [Substitution::swap(), Substitution::invert_a(), Substitution::transvection()]
    }

    pub fn image(&self, x: Letter) -> ReducedWord {
        let img = &self.images[x.generator() as usize];
        if x.is_inverse() {
            img.inverse()
        } else {
            img.clone()
        }
    }

    pub fn apply(&self, letters: &[Letter]) -> ReducedWord {
        free_reduce(letters.iter().flat_map(|&x| self.image(x).into_letters()))
    }

    /// Image of a conjugacy class, cyclically reduced and canonical.
    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::from_any(self.apply(w.letters()).into_letters())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Substitution) -> Substitution {
        Substitution::new(other.apply(self.images[0].letters()), other.apply(self.images[1].letters()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(Substitution::swap().apply_cyclic(&cw("aab")).to_string(), "abb");
        assert_eq!(Substitution::invert_a().apply_cyclic(&cw("aab")).to_string(), "bAA");
        assert_eq!(Substitution::transvection().apply_cyclic(&cw("aB")).to_string(), "a");
        // commutator goes to a conjugate of itself or its inverse
        let c = Substitution::transvection().apply_cyclic(&cw("abAB"));
        assert!(c == cw("abAB") || c == cw("abAB").inverse());
    }

    #[test]
    fn composition() {
        let s = Substitution::swap().then(&Substitution::invert_a());
        let w = cw("aabAbb");
        assert_eq!(s.apply_cyclic(&w), Substitution::invert_a().apply_cyclic(&Substitution::swap().apply_cyclic(&w)));
    }
}
