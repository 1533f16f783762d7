//! Brute-force enumeration of separating walls, independent of the
//! geodesic-based algorithm in the parent module.

use std::collections::BTreeSet;

use super::{WreathHalfSpace, WreathWall, WreathWalls};
use crate::error::{Error, Result};
use crate::groups::{LampConfig, LampElement, ReducedWord, WreathElement};
use crate::walls::{GroupWallSpace, Side, TreeHalfSpace, TreeWall};

/// Smallest radius for which [`brute_force_separating`] is guaranteed to
/// see every separating wall of `x` and `y`.
pub fn oracle_radius(x: &WreathElement, y: &WreathElement) -> usize {
    [x, y]
        .iter()
        .flat_map(|e| std::iter::once(e.position()).chain(e.lamps().support()))
        .map(ReducedWord::len)
        .max()
        .unwrap_or(0)
        + 1
}

fn tree_half_spaces(ww: &WreathWalls, radius: usize, cap: u64) -> Result<Vec<TreeHalfSpace>> {
    let ball = ww.space().group().ball(radius, cap)?;
    Ok(ball
        .into_iter()
        .filter(|p| !p.is_identity())
        .flat_map(|p| {
            let wall = TreeWall::new(p).expect("nonempty");
            [Side::Cone, Side::Cocone].map(|side| TreeHalfSpace::new(wall.clone(), side))
        })
        .collect())
}

fn separates(ww: &WreathWalls, x: &WreathElement, y: &WreathElement, e: &WreathHalfSpace) -> bool {
    ww.contains(x, e) != ww.contains(y, e)
}

/// Every wall with base deep endpoint in the ball of `radius`, either side,
/// and decoration `λx|Aᶜ` or `λy|Aᶜ`, kept when it separates `x` from `y`.
/// Any other decoration excludes both points.
pub fn brute_force_separating(
    ww: &WreathWalls,
    x: &WreathElement,
    y: &WreathElement,
    radius: usize,
    cap: u64,
) -> Result<BTreeSet<WreathWall>> {
    let mut out = BTreeSet::new();
    for base in tree_half_spaces(ww, radius, cap)? {
        for lamps in [x.lamps(), y.lamps()] {
            let decoration = lamps.restrict(|p| !base.contains(p));
            let e = WreathHalfSpace { base: base.clone(), decoration };
            if separates(ww, x, y, &e) {
                out.insert(WreathWall { positive: e });
            }
        }
    }
    Ok(out)
}

/// Like [`brute_force_separating`] but tries every decoration supported in
/// the ball of `radius` (intersected with `Aᶜ`), with no candidate
/// restriction. Exponential; intended for tiny instances.
pub fn exhaustive_separating(
    ww: &WreathWalls,
    x: &WreathElement,
    y: &WreathElement,
    radius: usize,
    cap: u64,
) -> Result<BTreeSet<WreathWall>> {
    let ball = ww.space().group().ball(radius, cap)?;
    let order = ww.lamps().order() as u128;
    let mut out = BTreeSet::new();
    for base in tree_half_spaces(ww, radius, cap)? {
        let outside: Vec<&ReducedWord> = ball.iter().filter(|p| !base.contains(p)).collect();
        let count = u32::try_from(outside.len())
            .ok()
            .and_then(|m| order.checked_pow(m))
            .filter(|&c| c <= cap as u128)
            .ok_or_else(|| Error::CapExceeded {
                predicted: format!("{order}^{}", outside.len()),
                cap,
            })?;
        let mut digits = vec![0u32; outside.len()];
        for _ in 0..count {
            let decoration = LampConfig::from_entries(
                outside
                    .iter()
                    .zip(&digits)
                    .filter(|(_, &d)| d != 0)
                    .map(|(p, &d)| ((*p).clone(), LampElement(d))),
            )?;
            let e = WreathHalfSpace { base: base.clone(), decoration };
            if separates(ww, x, y, &e) {
                out.insert(WreathWall { positive: e });
            }
            // odometer increment
            for d in digits.iter_mut() {
                *d += 1;
                if *d as u128 == order {
                    *d = 0;
                } else {
                    break;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::LampGroup;
    use crate::syntax::parse_element;
    use crate::walls::WallSpace;

    #[test]
    fn agrees_on_small_cases() {
        let ww = WreathWalls::over_free(2, LampGroup::cyclic(2).unwrap()).unwrap();
        let cases = [
            ("{}|1", "{}|1"),
            ("{}|1", "{1:1}|1"),
            ("{}|1", "{a:1}|1"),
            ("{a:1,Ba:1}|b", "{b:1}|aB"),
            ("{}|abab", "{A:1}|B"),
        ];
        for (a, b) in cases {
            let x = parse_element(a, ww.product()).unwrap();
            let y = parse_element(b, ww.product()).unwrap();
            let r = oracle_radius(&x, &y);
            let brute = brute_force_separating(&ww, &x, &y, r, 1 << 20).unwrap();
            assert_eq!(brute, ww.separating_walls(&x, &y), "{a} vs {b}");
        }
    }

    #[test]
    fn radius_counts_supports() {
        let ww = WreathWalls::over_free(2, LampGroup::cyclic(2).unwrap()).unwrap();
        let x = parse_element("{abab:1}|1", ww.product()).unwrap();
        assert_eq!(oracle_radius(&x, &ww.identity()), 5);
        assert_eq!(oracle_radius(&ww.identity(), &ww.identity()), 1);
    }

    #[test]
    fn exhaustive_matches_on_lamplighter_over_z() {
        let ww = WreathWalls::over_free(1, LampGroup::cyclic(2).unwrap()).unwrap();
        let x = parse_element("{a:1}|A", ww.product()).unwrap();
        let y = parse_element("{1:1}|a", ww.product()).unwrap();
        let full = exhaustive_separating(&ww, &x, &y, 2, 1 << 20).unwrap();
        assert_eq!(full, ww.separating_walls(&x, &y));
        assert!(exhaustive_separating(&ww, &x, &y, 2, 4).is_err());
    }
}
