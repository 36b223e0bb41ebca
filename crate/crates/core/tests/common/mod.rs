//! Naive reference implementations used as oracles.
//!
//! Nothing here calls the enumeration, canonicalization or intersection code
//! under test; it only borrows the `Letter` type and the surface order's
//! public cycle.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use sicgram::{Letter, SurfaceOrder};

pub fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(|c| Letter::from_char(c).expect("word text")).collect()
}

pub fn text(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

fn inv(x: Letter) -> Letter {
    x.inverse()
}

pub fn cyclically_reduced(w: &[Letter]) -> bool {
    let n = w.len();
    (0..n).all(|i| w[(i + 1) % n] != inv(w[i])) || n == 0
}

pub fn rotate(w: &[Letter], k: usize) -> Vec<Letter> {
    let k = k % w.len().max(1);
    let mut r = w[k..].to_vec();
    r.extend_from_slice(&w[..k]);
    r
}

/// Least rotation by trying them all.
pub fn least_rotation(w: &[Letter]) -> Vec<Letter> {
    (0..w.len()).map(|k| rotate(w, k)).min().unwrap_or_default()
}

pub fn is_power(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).any(|d| n % d == 0 && rotate(w, d) == w)
}

/// Every primitive class of length `n`: all `4^n` sequences, filtered and
/// grouped by rotation.
pub fn brute_force_classes(n: usize) -> Vec<Vec<Letter>> {
    let mut set = BTreeSet::new();
    for code in 0..4u64.pow(n as u32) {
        let w: Vec<Letter> = (0..n).map(|i| Letter::from_code(((code >> (2 * i)) & 3) as u8)).collect();
        if cyclically_reduced(&w) && !is_power(&w) {
            set.insert(least_rotation(&w));
        }
    }
    set.into_iter().collect()
}

/// A ray materialized to `2n + 1` letters.
fn ray(w: &[Letter], phase: usize, forward: bool) -> Vec<Letter> {
    let n = w.len() as isize;
    (0..2 * n + 1)
        .map(|k| {
            if forward {
                w[((phase as isize + k) % n) as usize]
            } else {
                inv(w[(phase as isize - 1 - k).rem_euclid(n) as usize])
            }
        })
        .collect()
}

/// Position of `x` in the cyclic order cut just after `incoming`.
fn place(order: &SurfaceOrder, incoming: Letter, x: Letter) -> usize {
    let cycle = order.cycle();
    let at = |y: Letter| cycle.iter().position(|&c| c == y).unwrap();
    (at(x) + 4 - at(incoming) - 1) % 4
}

fn compare(order: &SurfaceOrder, x: &[Letter], y: &[Letter]) -> Ordering {
    let mut incoming = order.root_cut();
    for (&a, &b) in x.iter().zip(y) {
        if a != b {
            return place(order, incoming, a).cmp(&place(order, incoming, b));
        }
        incoming = inv(a);
    }
    Ordering::Equal
}

/// Alternation of endpoint pairs, by sorting the four materialized rays.
pub fn naive_linked(order: &SurfaceOrder, w: &[Letter], i: usize, j: usize) -> bool {
    let mut rays = vec![(ray(w, i, false), 0), (ray(w, i, true), 0), (ray(w, j, false), 1), (ray(w, j, true), 1)];
    rays.sort_by(|a, b| compare(order, &a.0, &b.0));
    for k in 0..3 {
        assert_ne!(compare(order, &rays[k].0, &rays[k + 1].0), Ordering::Equal, "equal rays in {}", text(w));
    }
    rays[0].1 == rays[2].1
}

fn agreement(x: &[Letter], y: &[Letter]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

/// Self-intersection: linked strand pairs, grouped into crossings.
///
/// A crossing of two lifts is seen by every strand pair sitting on the path
/// the lifts share. That path is walked explicitly and the crossing is keyed
/// by the smallest strand pair on it.
pub fn naive_self_intersection(order: &SurfaceOrder, w: &[Letter]) -> usize {
    let n = w.len();
    let m = n as isize;
    let mut crossings = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if !naive_linked(order, w, i, j) {
                continue;
            }
            let (sf, sb) = (ray(w, i, true), ray(w, i, false));
            let (tf, tb) = (ray(w, j, true), ray(w, j, false));
            let parallel = (agreement(&sf, &tf), agreement(&sb, &tb));
            let anti = (agreement(&sf, &tb), agreement(&sb, &tf));
            let (ahead, behind, step) = if parallel.0 + parallel.1 > 0 { (parallel.0, parallel.1, 1) } else { (anti.0, anti.1, -1) };
            assert!(ahead + behind < 2 * n, "lifts of a primitive word share a bounded path");
            let key = (-(behind as isize)..=ahead as isize)
                .map(|k| {
                    let a = (i as isize + k).rem_euclid(m) as usize;
                    let b = (j as isize + step * k).rem_euclid(m) as usize;
                    (a.min(b), a.max(b))
                })
                .min()
                .unwrap();
            crossings.insert(key);
        }
    }
    crossings.len()
}

/// The undeduplicated count: every linked strand pair.
pub fn naive_linked_pairs(order: &SurfaceOrder, w: &[Letter]) -> usize {
    let n = w.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| naive_linked(order, w, i, j)).count()
}
