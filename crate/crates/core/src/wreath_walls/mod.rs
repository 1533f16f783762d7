//! Walls on the wreath product `H ≀ G` built from the walls of `G`.
//!
//! For a half-space `A` of `G` and a finitely supported decoration `μ` on
//! the complement `Aᶜ`, the half-space `E(A, μ)` is the set of elements
//! `λg` with `g ∈ A` and `λ` agreeing with `μ` on `Aᶜ`. The walls of the
//! wreath product are the partitions `{E(A, μ), E(A, μ)ᶜ}`.
//!
//! Because `H` is nontrivial, `E(A, μ)ᶜ` is never itself of the form
//! `E(A', μ')`, so a wall is identified by its `(A, μ)` pair.

mod oracle;
mod proper;

pub use oracle::{brute_force_separating, exhaustive_separating, oracle_radius};
pub use proper::{box_radius, box_size, enumerate_box, growth_table, properness_check, GrowthRow, ProperReport};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{DiscreteGroup, LampConfig, LampGroup, WreathElement, WreathProduct};
use crate::walls::{CayleyTree, GroupWallSpace, TreeHalfSpace, WallSpace};
use crate::groups::ReducedWord;

/// The half-space `E(A, μ)`: `base` is `A`, `decoration` is `μ`, supported
/// in `Aᶜ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathHalfSpace<A = TreeHalfSpace, P = ReducedWord> {
    base: A,
    decoration: LampConfig<P>,
}

impl<A, P> WreathHalfSpace<A, P> {
    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn decoration(&self) -> &LampConfig<P> {
        &self.decoration
    }
}

impl<A: fmt::Display, P: fmt::Display> fmt::Display for WreathHalfSpace<A, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}, {})", self.base, self.decoration)
    }
}

/// The wall `{E(A, μ), E(A, μ)ᶜ}`, stored by its positive half.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathWall<A = TreeHalfSpace, P = ReducedWord> {
    positive: WreathHalfSpace<A, P>,
}

impl<A, P> WreathWall<A, P> {
    pub fn positive(&self) -> &WreathHalfSpace<A, P> {
        &self.positive
    }
}

impl<A: fmt::Display, P: fmt::Display> fmt::Display for WreathWall<A, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.positive.fmt(f)
    }
}

impl serde::Serialize for WreathHalfSpace<TreeHalfSpace, ReducedWord> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};

        struct Decoration<'a>(&'a LampConfig);
        impl serde::Serialize for Decoration<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (p, v) in self.0.iter() {
                    map.serialize_entry(&p.to_string(), &v.id())?;
                }
                map.end()
            }
        }

        let mut s = serializer.serialize_struct("WreathHalfSpace", 3)?;
        s.serialize_field("side", &self.base.side().to_string())?;
        s.serialize_field("deep_endpoint", &self.base.wall().deep_endpoint().to_string())?;
        s.serialize_field("decoration", &Decoration(&self.decoration))?;
        s.end()
    }
}

impl serde::Serialize for WreathWall<TreeHalfSpace, ReducedWord> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.positive.serialize(serializer)
    }
}

type HalfSpaceOf<S> = WreathHalfSpace<<S as GroupWallSpace>::HalfSpace, <S as WallSpace>::Point>;
type WallOf<S> = WreathWall<<S as GroupWallSpace>::HalfSpace, <S as WallSpace>::Point>;
type ElementOf<S> = WreathElement<<S as WallSpace>::Point>;

/// Wall structure on `H ≀ G` induced by a wall structure on `G`.
#[derive(Debug, Clone)]
pub struct WreathWalls<S: GroupWallSpace = CayleyTree>
where
    S::Point: fmt::Display,
{
    space: S,
    product: WreathProduct<S::Group>,
}

impl WreathWalls<CayleyTree> {
    /// `H ≀ F_rank` over the Cayley-tree walls.
    pub fn over_free(rank: usize, lamps: LampGroup) -> Result<Self> {
        Ok(Self::new(CayleyTree::of_rank(rank)?, lamps))
    }
}

impl<S> WreathWalls<S>
where
    S: GroupWallSpace,
    S::Point: fmt::Display,
{
    pub fn new(space: S, lamps: LampGroup) -> Self {
        let product = WreathProduct::new(space.group().clone(), lamps);
        WreathWalls { space, product }
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn product(&self) -> &WreathProduct<S::Group> {
        &self.product
    }

    /// Checked constructor for `E(A, μ)`.
    pub fn half_space(&self, base: S::HalfSpace, decoration: LampConfig<S::Point>) -> Result<HalfSpaceOf<S>> {
        self.product.check_config(&decoration)?;
        if let Some(p) = decoration.support().find(|p| self.space.contains(&base, p)) {
            return Err(Error::DecorationInsideHalfSpace(p.to_string()));
        }
        Ok(WreathHalfSpace { base, decoration })
    }

    pub fn wall(&self, positive: HalfSpaceOf<S>) -> WallOf<S> {
        WreathWall { positive }
    }

    /// `λ` restricted to the complement of `base`.
    pub fn restrict_outside(&self, config: &LampConfig<S::Point>, base: &S::HalfSpace) -> LampConfig<S::Point> {
        config.restrict(|p| !self.space.contains(base, p))
    }

    /// Whether `x = λg` lies in `E(A, μ)`: `g ∈ A` and `λ|Aᶜ = μ`.
    pub fn contains(&self, x: &ElementOf<S>, e: &HalfSpaceOf<S>) -> bool {
        if !self.space.contains(&e.base, x.position()) {
            return false;
        }
        // μ lives on Aᶜ, so λ|Aᶜ = μ iff every lamp of λ outside A matches μ
        // and the counts agree
        let mut outside = 0;
        for (p, v) in x.lamps().iter() {
            if !self.space.contains(&e.base, p) {
                if e.decoration.get(p) != v {
                    return false;
                }
                outside += 1;
            }
        }
        outside == e.decoration.len()
    }

    /// Walls `E(A, μ)` with `x ∈ E(A, μ)` and `y ∉ E(A, μ)`.
    ///
    /// Membership of `x` forces `μ = λx|Aᶜ`, and non-membership of `y` then
    /// means `Aᶜ` meets `{gy} ∪ supp(λx⁻¹λy)` while `gx ∈ A`. So `A` is the
    /// side containing `gx` of a base wall separating `gx` from a point of
    /// that finite set.
    pub fn separating_walls_directed(&self, x: &ElementOf<S>, y: &ElementOf<S>) -> BTreeSet<WallOf<S>> {
        let diff = self.product.config_left_divide(x.lamps(), y.lamps());
        let targets = std::iter::once(y.position()).chain(diff.support());
        let mut base_walls = BTreeSet::new();
        for t in targets {
            base_walls.extend(self.space.separating_walls(x.position(), t));
        }
        base_walls
            .into_iter()
            .map(|wall| {
                let base = self.space.half_space_containing(&wall, x.position());
                let decoration = self.restrict_outside(x.lamps(), &base);
                WreathWall { positive: WreathHalfSpace { base, decoration } }
            })
            .collect()
    }

    /// Number of walls separating `x` and `y`, in either direction.
    pub fn wall_distance(&self, x: &ElementOf<S>, y: &ElementOf<S>) -> usize {
        self.separating_walls_directed(x, y).len() + self.separating_walls_directed(y, x).len()
    }

    /// `γ·E(A, μ)` for `γ = λg`: `E(gA, λ|(gA)ᶜ · gμ)`.
    pub fn act(&self, gamma: &ElementOf<S>, e: &HalfSpaceOf<S>) -> HalfSpaceOf<S> {
        let g = gamma.position();
        let base = self.space.translate(g, &e.base);
        let moved = self.product.shift(g, &e.decoration);
        let left = self.restrict_outside(gamma.lamps(), &base);
        let decoration = self.product.config_mul(&left, &moved);
        WreathHalfSpace { base, decoration }
    }

    pub fn act_on_wall(&self, gamma: &ElementOf<S>, wall: &WallOf<S>) -> WallOf<S> {
        WreathWall { positive: self.act(gamma, &wall.positive) }
    }

    pub fn identity(&self) -> ElementOf<S> {
        self.product.identity()
    }

    pub fn lamps(&self) -> &LampGroup {
        self.product.lamps()
    }

    pub fn base_group(&self) -> &S::Group {
        self.space.group()
    }

    pub fn is_base_identity(&self, g: &S::Point) -> bool {
        self.space.group().is_identity(g)
    }
}

impl<S> WallSpace for WreathWalls<S>
where
    S: GroupWallSpace,
    S::Point: fmt::Display,
{
    type Point = ElementOf<S>;
    type Wall = WallOf<S>;

    fn in_positive_half(&self, wall: &Self::Wall, x: &Self::Point) -> bool {
        self.contains(x, &wall.positive)
    }

    fn separating_walls(&self, x: &Self::Point, y: &Self::Point) -> BTreeSet<Self::Wall> {
        let mut walls = self.separating_walls_directed(x, y);
        walls.extend(self.separating_walls_directed(y, x));
        walls
    }

    fn wall_distance(&self, x: &Self::Point, y: &Self::Point) -> usize {
        WreathWalls::wall_distance(self, x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{LampElement, Letter};
    use crate::syntax::{parse_element, parse_word};
    use crate::walls::{Side, TreeWall};
    use proptest::prelude::*;

    fn z(order: usize) -> WreathWalls {
        WreathWalls::over_free(2, LampGroup::cyclic(order).unwrap()).unwrap()
    }

    fn el(ww: &WreathWalls, s: &str) -> WreathElement {
        parse_element(s, ww.product()).unwrap()
    }

    fn w(s: &str) -> ReducedWord {
        parse_word(s, 2).unwrap()
    }

    #[test]
    fn membership_examples() {
        let ww = z(2);
        let e = ww.half_space(TreeHalfSpace::cocone(w("a")).unwrap(), LampConfig::new()).unwrap();
        assert!(ww.contains(&ww.identity(), &e));

        let x = el(&ww, "{a:1}|1");
        assert!(!ww.contains(&x, &e));
        let e = ww
            .half_space(TreeHalfSpace::cocone(w("a")).unwrap(), LampConfig::single(w("a"), LampElement(1)))
            .unwrap();
        assert!(ww.contains(&x, &e));
        assert_eq!(e.to_string(), "E(COCONE(a), {a:1})");
    }

    #[test]
    fn decoration_must_avoid_base() {
        let ww = z(2);
        let err = ww
            .half_space(TreeHalfSpace::cone(w("a")).unwrap(), LampConfig::single(w("ab"), LampElement(1)))
            .unwrap_err();
        assert_eq!(err, Error::DecorationInsideHalfSpace("ab".into()));
    }

    #[test]
    fn directed_examples() {
        let ww = z(2);
        let one = ww.identity();
        assert!(ww.separating_walls_directed(&one, &one).is_empty());
        // lamp at the origin is invisible to every wall
        let origin = el(&ww, "{1:1}|1");
        assert!(ww.separating_walls_directed(&one, &origin).is_empty());
        assert!(ww.separating_walls_directed(&origin, &one).is_empty());

        let lamp_a = el(&ww, "{a:1}|1");
        let walls: Vec<String> = ww.separating_walls_directed(&one, &lamp_a).iter().map(|x| x.to_string()).collect();
        assert_eq!(walls, ["E(COCONE(a), {})"]);
        let walls: Vec<String> = ww.separating_walls_directed(&lamp_a, &one).iter().map(|x| x.to_string()).collect();
        assert_eq!(walls, ["E(COCONE(a), {a:1})"]);
    }

    #[test]
    fn distance_examples() {
        for order in [2, 3, 5] {
            let ww = z(order);
            let one = ww.identity();
            assert_eq!(ww.wall_distance(&one, &el(&ww, "{1:1}|1")), 0);
            for h in 1..order {
                assert_eq!(ww.wall_distance(&one, &el(&ww, &format!("{{a:{h}}}|1"))), 2);
            }
            for g in ["a", "ab", "aBA", "bbb", "Ab"] {
                assert_eq!(ww.wall_distance(&one, &el(&ww, &format!("{{}}|{g}"))), 2 * w(g).len());
            }
        }
    }

    #[test]
    fn action_examples() {
        let ww = z(3);
        let e = ww
            .half_space(TreeHalfSpace::cone(w("b")).unwrap(), LampConfig::single(w("a"), LampElement(2)))
            .unwrap();
        assert_eq!(ww.act(&ww.identity(), &e), e);

        // pure translation: E(gA, gμ)
        let g = el(&ww, "{}|A");
        let image = ww.act(&g, &e);
        assert_eq!(image.base(), &TreeHalfSpace::cone(w("Ab")).unwrap());
        assert_eq!(image.decoration(), &LampConfig::single(w("1"), LampElement(2)));

        // pure configuration: E(A, λ|Aᶜ · μ)
        let lam = el(&ww, "{a:1,b:1,bb:2,Ba:1}|1");
        let image = ww.act(&lam, &e);
        assert_eq!(image.base(), e.base());
        // a: 1 + 2 = 0 in Z/3 drops out; b and bb lie inside A
        assert_eq!(image.decoration().to_string(), "{Ba:1}");
    }

    #[test]
    fn side_ordering_is_canonical() {
        let cone = TreeHalfSpace::new(TreeWall::new(w("a")).unwrap(), Side::Cone);
        let cocone = cone.complement();
        assert!(cone < cocone);
        assert!(cocone < TreeHalfSpace::cone(w("A")).unwrap());
    }

    /// Tree edges in the hull of {1, g} ∪ supp(λ): the union of prefixes.
    fn hull_edges(x: &WreathElement) -> usize {
        let mut prefixes = BTreeSet::new();
        for p in std::iter::once(x.position()).chain(x.lamps().support()) {
            for k in 1..=p.len() {
                prefixes.insert(p.prefix(k));
            }
        }
        prefixes.len()
    }

    fn word() -> impl Strategy<Value = ReducedWord> {
        prop::collection::vec((0usize..2, any::<bool>()), 0..4)
            .prop_map(|v| ReducedWord::reduce(2, v.into_iter().map(|(g, i)| Letter::new(g, i))).unwrap())
    }

    fn element(order: u32) -> impl Strategy<Value = WreathElement> {
        (prop::collection::vec((word(), 1..order), 0..4), word()).prop_map(|(lamps, pos)| {
            let mut config = LampConfig::new();
            for (p, v) in lamps {
                config.set(p, LampElement(v));
            }
            WreathElement::new(config, pos)
        })
    }

    proptest! {
        #[test]
        fn distance_from_identity_is_twice_the_hull(x in element(3)) {
            let ww = z(3);
            prop_assert_eq!(ww.wall_distance(&ww.identity(), &x), 2 * hull_edges(&x));
        }

        #[test]
        fn directed_sets_are_disjoint_and_separating(x in element(3), y in element(3)) {
            let ww = z(3);
            let fwd = ww.separating_walls_directed(&x, &y);
            let bwd = ww.separating_walls_directed(&y, &x);
            prop_assert!(fwd.is_disjoint(&bwd));
            for wall in &fwd {
                prop_assert!(ww.contains(&x, wall.positive()) && !ww.contains(&y, wall.positive()));
            }
            for wall in &bwd {
                prop_assert!(ww.contains(&y, wall.positive()) && !ww.contains(&x, wall.positive()));
            }
        }

        #[test]
        fn wall_pseudometric(x in element(2), y in element(2), z_ in element(2), g in element(2)) {
            let ww = z(2);
            let d = |a: &WreathElement, b: &WreathElement| ww.wall_distance(a, b);
            prop_assert_eq!(d(&x, &y), d(&y, &x));
            prop_assert_eq!(d(&x, &x), 0);
            prop_assert!(d(&x, &z_) <= d(&x, &y) + d(&y, &z_));
            let wp = ww.product();
            prop_assert_eq!(d(&wp.mul(&g, &x), &wp.mul(&g, &y)), d(&x, &y));
        }

        #[test]
        fn walls_move_with_the_group(x in element(3), y in element(3), g in element(3)) {
            let ww = z(3);
            let wp = ww.product();
            let moved: BTreeSet<_> = ww
                .separating_walls_directed(&x, &y)
                .iter()
                .map(|wall| ww.act_on_wall(&g, wall))
                .collect();
            prop_assert_eq!(moved, ww.separating_walls_directed(&wp.mul(&g, &x), &wp.mul(&g, &y)));
        }
    }
}
