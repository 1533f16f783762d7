#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use wreathwalls::groups::{LampConfig, LampElement, Letter, ReducedWord, WreathElement};
use wreathwalls::walls::{Side, TreeHalfSpace, TreeWall};
use wreathwalls::wreath_walls::{WreathHalfSpace, WreathWalls};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random reduced word with length uniform in `0..=max_len`.
pub fn word(rng: &mut impl Rng, rank: usize, max_len: usize) -> ReducedWord {
    let len = rng.gen_range(0..=max_len);
    let mut w = ReducedWord::identity(rank);
    while w.len() < len {
        let letter = Letter::new(rng.gen_range(0..rank), rng.gen());
        if let Some(next) = w.extend(letter) {
            w = next;
        }
    }
    w
}

pub fn config(rng: &mut impl Rng, rank: usize, order: usize, max_len: usize, max_lamps: usize) -> LampConfig {
    let n = rng.gen_range(0..=max_lamps);
    let mut entries = std::collections::BTreeMap::new();
    for _ in 0..n {
        entries.insert(word(rng, rank, max_len), LampElement(rng.gen_range(1..order as u32)));
    }
    LampConfig::from_entries(entries).unwrap()
}

pub fn element(rng: &mut impl Rng, ww: &WreathWalls, max_len: usize, max_lamps: usize) -> WreathElement {
    let rank = ww.product().base().rank();
    let order = ww.lamps().order();
    WreathElement::new(config(rng, rank, order, max_len, max_lamps), word(rng, rank, max_len))
}

pub fn tree_half_space(rng: &mut impl Rng, rank: usize, max_len: usize) -> TreeHalfSpace {
    let deep = loop {
        let w = word(rng, rank, max_len);
        if !w.is_identity() {
            break w;
        }
    };
    let side = if rng.gen() { Side::Cone } else { Side::Cocone };
    TreeHalfSpace::new(TreeWall::new(deep).unwrap(), side)
}

/// Random `E(A, μ)`. Half the time `μ` is copied from `near` so that `near`
/// has a fair chance of lying inside.
pub fn wreath_half_space(
    rng: &mut impl Rng,
    ww: &WreathWalls,
    near: &WreathElement,
    max_len: usize,
) -> WreathHalfSpace {
    let rank = ww.product().base().rank();
    let order = ww.lamps().order();
    let mut base = tree_half_space(rng, rank, max_len);
    let decoration = if rng.gen() {
        if !base.contains(near.position()) {
            base = base.complement();
        }
        ww.restrict_outside(near.lamps(), &base)
    } else {
        let c = config(rng, rank, order, max_len, 3);
        ww.restrict_outside(&c, &base)
    };
    ww.half_space(base, decoration).unwrap()
}
