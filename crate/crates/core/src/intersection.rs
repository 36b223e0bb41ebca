//! Self-intersection numbers of primitive classes on the punctured torus.
//!
//! The universal cover of the punctured torus retracts onto the 4-valent
//! tree of the free group, embedded in the plane with the cyclic order of
//! [`SurfaceOrder`] at every vertex. Infinite reduced words read from the
//! base vertex are points of the circle at infinity, and the planar
//! embedding orders them circularly.
//!
//! Each letter position `i` of a cyclic word `w` is a strand: the lift of
//! the curve through the base vertex entering along `w[i-1]` and leaving
//! along `w[i]`. Its two endpoints are the backward ray
//! `w[i-1]⁻¹ w[i-2]⁻¹ …` and the forward ray `w[i] w[i+1] …`. Two lifts
//! cross iff their endpoint pairs alternate around the circle.
//!
//! Two crossing lifts may share a path of several vertices, and the pair is
//! then seen from every vertex on that path. Each crossing is counted once:
//!
//! * no shared edge at the base vertex: count it;
//! * shared forward edge (`w[i] = w[j]`) but distinct backward edges: this
//!   is the start of a parallel overlap, count it; the opposite end and the
//!   interior vertices are skipped;
//! * one lift's forward edge is the other's backward edge (anti-parallel
//!   overlap): both ends of the overlap look like this, so each counts half.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::{is_cyclically_reduced, letters_to_string, parse_letters, smallest_period, CyclicWord};

/// Cyclic order of the four half-edges at a vertex of the ribbon graph,
/// cut just after `root_cut` to give the linear order at the base vertex.
///
/// The text form lists the linear order at the base vertex, so the last
/// letter is the root cut: `abAB` is the cycle `(a, b, A, B)` cut after `B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SurfaceOrder {
    cycle: [Letter; 4],
    root_cut: Letter,
    /// `rank[incoming][x]`: position of `x` after cutting just after `incoming`.
    rank: [[u8; 4]; 4],
}

/// The punctured-torus order `(a, b, A, B)` cut after `B`.
///
/// With this order every Christoffel class and the boundary class `abAB`
/// count zero crossings; the acceptance suite pins it.
pub const PUNCTURED_TORUS: SurfaceOrder = SurfaceOrder::from_cycle_unchecked(
    [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV],
    Letter::B_INV,
);

impl SurfaceOrder {
    const fn from_cycle_unchecked(cycle: [Letter; 4], root_cut: Letter) -> SurfaceOrder {
        let mut pos = [0u8; 4];
        let mut i = 0;
        while i < 4 {
            pos[cycle[i].code() as usize] = i as u8;
            i += 1;
        }
        let mut rank = [[0u8; 4]; 4];
        let mut inc = 0;
        while inc < 4 {
            let mut x = 0;
            while x < 4 {
                rank[inc][x] = (pos[x] + 8 - pos[inc] - 1) % 4;
                x += 1;
            }
            inc += 1;
        }
        SurfaceOrder { cycle, root_cut, rank }
    }

    pub fn new(cycle: [Letter; 4], root_cut: Letter) -> Result<SurfaceOrder> {
        let mut seen = [false; 4];
        for x in cycle {
            if std::mem::replace(&mut seen[x.code() as usize], true) {
                return Err(Error::InvalidOrder(format!("letter {x} repeated")));
            }
        }
        Ok(SurfaceOrder::from_cycle_unchecked(cycle, root_cut))
    }

    pub fn cycle(&self) -> [Letter; 4] {
        self.cycle
    }

    pub fn root_cut(&self) -> Letter {
        self.root_cut
    }

    /// Linear order at a vertex entered through `incoming`.
    #[inline]
    pub fn rank_after(&self, incoming: Letter, x: Letter) -> u8 {
        self.rank[incoming.code() as usize][x.code() as usize]
    }

    /// Orders two distinct letters as seen from a vertex entered through `incoming`.
    #[inline]
    pub fn compare_after(&self, incoming: Letter, x: Letter, y: Letter) -> Ordering {
        self.rank_after(incoming, x).cmp(&self.rank_after(incoming, y))
    }

    /// Linear order at the base vertex.
    pub fn root_order(&self) -> [Letter; 4] {
        let mut out = self.cycle;
        out.sort_by_key(|&x| self.rank_after(self.root_cut, x));
        out
    }

    /// Applies a letter permutation to the order, for relabelled surfaces.
    pub fn relabel(&self, f: impl Fn(Letter) -> Letter) -> SurfaceOrder {
        SurfaceOrder::new(self.cycle.map(&f), f(self.root_cut)).expect("relabelling is a bijection")
    }
}

impl Default for SurfaceOrder {
    fn default() -> Self {
        PUNCTURED_TORUS
    }
}

impl fmt::Display for SurfaceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&letters_to_string(&self.root_order()))
    }
}

impl fmt::Debug for SurfaceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurfaceOrder({self})")
    }
}

impl FromStr for SurfaceOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s).map_err(|e| Error::InvalidOrder(e.to_string()))?;
        let cycle: [Letter; 4] = letters
            .try_into()
            .map_err(|_| Error::InvalidOrder(format!("{s:?} must list exactly four letters")))?;
        SurfaceOrder::new(cycle, cycle[3])
    }
}

impl TryFrom<String> for SurfaceOrder {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SurfaceOrder> for String {
    fn from(o: SurfaceOrder) -> String {
        o.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// An endpoint at infinity of a lift through the base vertex: the periodic
/// infinite word read from `phase` in one direction.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Ray<'a> {
    word: &'a [Letter],
    phase: usize,
    direction: Direction,
}

impl<'a> Ray<'a> {
    pub fn new(word: &'a [Letter], phase: usize, direction: Direction) -> Ray<'a> {
        assert!(!word.is_empty() && phase < word.len());
        Ray { word, phase, direction }
    }

    pub fn forward(word: &'a [Letter], phase: usize) -> Ray<'a> {
        Ray::new(word, phase, Direction::Forward)
    }

    pub fn backward(word: &'a [Letter], phase: usize) -> Ray<'a> {
        Ray::new(word, phase, Direction::Backward)
    }

    pub fn phase(&self) -> usize {
        self.phase
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// The `k`-th letter of the infinite word, 0-indexed.
    #[inline]
    pub fn letter(&self, k: usize) -> Letter {
        let n = self.word.len();
        match self.direction {
            Direction::Forward => self.word[(self.phase + k) % n],
            Direction::Backward => self.word[(self.phase + n - 1 - k % n) % n].inverse(),
        }
    }
}

impl fmt::Debug for Ray<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: String = (0..self.word.len()).map(|k| self.letter(k).to_char()).collect();
        write!(f, "{head}…")
    }
}

pub fn ray_letter(r: &Ray<'_>, k: usize) -> Letter {
    r.letter(k)
}

/// Position of two rays on the circle at infinity, cut at the base vertex.
///
/// Both rays must come from words of the same length `n`; rays that agree
/// on `n` letters are equal since both are periodic with period `n`.
pub fn compare_rays(x: &Ray<'_>, y: &Ray<'_>, order: &SurfaceOrder) -> Ordering {
    let n = x.word.len();
    debug_assert_eq!(n, y.word.len());
    let mut incoming = order.root_cut;
    for k in 0..n {
        let (lx, ly) = (x.letter(k), y.letter(k));
        if lx != ly {
            return order.compare_after(incoming, lx, ly);
        }
        incoming = lx.inverse();
    }
    Ordering::Equal
}

/// The lift through the base vertex at letter position `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strand<'a> {
    word: &'a [Letter],
    index: usize,
}

impl<'a> Strand<'a> {
    pub fn new(word: &'a [Letter], index: usize) -> Strand<'a> {
        assert!(index < word.len());
        Strand { word, index }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn neg(&self) -> Ray<'a> {
        Ray::backward(self.word, self.index)
    }

    pub fn pos(&self) -> Ray<'a> {
        Ray::forward(self.word, self.index)
    }

    /// First letters of the backward and forward rays.
    pub fn exits(&self) -> (Letter, Letter) {
        let n = self.word.len();
        (self.word[(self.index + n - 1) % n].inverse(), self.word[self.index])
    }
}

/// Whether the endpoint pairs of two strands alternate around the circle.
pub fn linked(s: &Strand<'_>, t: &Strand<'_>, order: &SurfaceOrder) -> Result<bool> {
    if s.word != t.word || s.index == t.index {
        return Err(Error::SameStrand);
    }
    let mut rays = [(s.neg(), 0u8), (s.pos(), 0), (t.neg(), 1), (t.pos(), 1)];
    for i in 0..4 {
        for j in i + 1..4 {
            if compare_rays(&rays[i].0, &rays[j].0, order) == Ordering::Equal {
                return Err(Error::EqualRays(format!("{:?}", rays[i].0), format!("{:?}", rays[j].0)));
            }
        }
    }
    rays.sort_by(|x, y| compare_rays(&x.0, &y.0, order));
    Ok(rays[0].1 == rays[2].1)
}

/// How a linked strand pair contributes, in halves.
fn crossing_weight(s: (Letter, Letter), t: (Letter, Letter)) -> u32 {
    let ((sn, sp), (tn, tp)) = (s, t);
    let parallel = sp == tp || sn == tn;
    let antiparallel = sp == tn || sn == tp;
    match (parallel, antiparallel) {
        (false, false) => 2,
        (true, false) if sp == tp && sn != tn => 2,
        (true, false) => 0,
        (false, true) if sp == tn && sn == tp => 0,
        (false, true) => 1,
        (true, true) => unreachable!("a strand's two exits are distinct"),
    }
}

/// Minimal number of self-crossings of a non-power class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SelfIntersectionCount(pub u32);

impl SelfIntersectionCount {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for SelfIntersectionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Reusable scratch space for counting many words of similar length.
#[derive(Clone, Debug)]
pub struct Engine {
    order: SurfaceOrder,
    /// `w w`, so every forward ray is a contiguous window of length `n`.
    forward: Vec<Letter>,
    /// The inverse word `w⁻¹` doubled, for backward rays.
    backward: Vec<Letter>,
    rays: Vec<u32>,
    slot: Vec<u32>,
}

impl Engine {
    pub fn new(order: SurfaceOrder) -> Engine {
        Engine { order, forward: Vec::new(), backward: Vec::new(), rays: Vec::new(), slot: Vec::new() }
    }

    pub fn order(&self) -> &SurfaceOrder {
        &self.order
    }

    /// Counts crossings for any rotation of a primitive cyclically reduced word.
    pub fn count(&mut self, letters: &[Letter]) -> Result<SelfIntersectionCount> {
        let n = letters.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        if !is_cyclically_reduced(letters) {
            return Err(Error::NotCyclicallyReduced(letters_to_string(letters)));
        }
        if smallest_period(letters) != n {
            return Err(Error::NotPrimitive(letters_to_string(letters)));
        }
        Ok(self.count_unchecked(letters))
    }

    /// Same as [`Engine::count`] for input already known to be primitive and
    /// cyclically reduced.
    pub fn count_unchecked(&mut self, letters: &[Letter]) -> SelfIntersectionCount {
        let n = letters.len();
        if n < 2 {
            return SelfIntersectionCount(0);
        }
        self.forward.clear();
        self.forward.extend_from_slice(letters);
        self.forward.extend_from_slice(letters);
        self.backward.clear();
        self.backward.extend(letters.iter().rev().map(|l| l.inverse()));
        self.backward.extend_from_within(..n);

        // ray 2i is the backward ray of strand i, ray 2i+1 the forward ray
        let (fwd, bwd, order) = (&self.forward, &self.backward, &self.order);
        let window = |ray: u32| -> &[Letter] {
            let i = (ray >> 1) as usize;
            if ray & 1 == 1 {
                &fwd[i..i + n]
            } else {
                let start = n - i;
                &bwd[start..start + n]
            }
        };
        self.rays.clear();
        self.rays.extend(0..2 * n as u32);
        self.rays.sort_unstable_by(|&x, &y| {
            let (wx, wy) = (window(x), window(y));
            match wx.iter().zip(wy).position(|(p, q)| p != q) {
                Some(0) => order.compare_after(order.root_cut, wx[0], wy[0]),
                Some(k) => order.compare_after(wx[k - 1].inverse(), wx[k], wy[k]),
                None => Ordering::Equal,
            }
        });
        debug_assert!(self.rays.windows(2).all(|p| window(p[0]) != window(p[1])));

        self.slot.clear();
        self.slot.resize(2 * n, 0);
        for (place, &ray) in self.rays.iter().enumerate() {
            self.slot[ray as usize] = place as u32;
        }

        let exits = |i: usize| (letters[(i + n - 1) % n].inverse(), letters[i]);
        let mut halves = 0u32;
        for i in 0..n {
            let (a, b) = (self.slot[2 * i], self.slot[2 * i + 1]);
            let (lo, hi) = (a.min(b), a.max(b));
            for j in i + 1..n {
                let inside = |p: u32| lo < p && p < hi;
                if inside(self.slot[2 * j]) != inside(self.slot[2 * j + 1]) {
                    halves += crossing_weight(exits(i), exits(j));
                }
            }
        }
        debug_assert!(halves % 2 == 0, "anti-parallel overlaps come in pairs");
        SelfIntersectionCount(halves / 2)
    }
}

/// Self-intersection number of a primitive class.
pub fn self_intersection(w: &CyclicWord, order: &SurfaceOrder) -> Result<SelfIntersectionCount> {
    Engine::new(*order).count(w.letters())
}
