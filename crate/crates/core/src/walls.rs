//! Spaces with walls, and the wall structure on the Cayley tree of a free
//! group.
//!
//! A wall is a partition of a set into two half-spaces; the wall distance
//! between two points counts the walls whose halves separate them. On the
//! Cayley tree of `F_n` each edge is a wall, the two half-spaces being the
//! two components left when the edge is removed, and the wall distance is
//! the word metric.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{DiscreteGroup, FreeGroup, ReducedWord};

/// A set with a family of walls, each with a distinguished positive half.
///
/// Wall families are assumed injective: each wall value is one partition.
/// An implementation whose family repeats a partition must return it once
/// per repetition from [`WallSpace::separating_walls`] (e.g. by tagging the
/// copies), since the wall distance counts walls with multiplicity.
pub trait WallSpace {
    type Point: Clone + Ord + fmt::Debug;
    type Wall: Clone + Ord + fmt::Debug;

    fn in_positive_half(&self, wall: &Self::Wall, x: &Self::Point) -> bool;

    /// Walls having `x` and `y` on different sides. Always finite.
    fn separating_walls(&self, x: &Self::Point, y: &Self::Point) -> BTreeSet<Self::Wall>;

    fn wall_distance(&self, x: &Self::Point, y: &Self::Point) -> usize {
        self.separating_walls(x, y).len()
    }
}

/// A group with a left-invariant wall structure on itself, exposing its
/// half-spaces and the action of the group on them.
pub trait GroupWallSpace: WallSpace {
    type Group: DiscreteGroup<Element = Self::Point> + Clone;
    type HalfSpace: Clone + Ord + fmt::Debug;

    fn group(&self) -> &Self::Group;
    fn contains(&self, h: &Self::HalfSpace, x: &Self::Point) -> bool;
    fn complement(&self, h: &Self::HalfSpace) -> Self::HalfSpace;
    fn wall_of(&self, h: &Self::HalfSpace) -> Self::Wall;
    fn half_space_containing(&self, wall: &Self::Wall, x: &Self::Point) -> Self::HalfSpace;
    /// The half-space `g·h`; `contains(translate(g, h), g·x) == contains(h, x)`.
    fn translate(&self, g: &Self::Point, h: &Self::HalfSpace) -> Self::HalfSpace;
}

/// Tree edge, identified by its endpoint farther from the identity. The
/// other endpoint is the deep endpoint with its last letter dropped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeWall {
    deep: ReducedWord,
}

impl TreeWall {
    pub fn new(deep: ReducedWord) -> Result<Self> {
        if deep.is_identity() {
            return Err(Error::IdentityWall);
        }
        Ok(TreeWall { deep })
    }

    pub fn deep_endpoint(&self) -> &ReducedWord {
        &self.deep
    }

    pub fn shallow_endpoint(&self) -> ReducedWord {
        self.deep.parent().expect("deep endpoint is nonempty")
    }
}

impl fmt::Display for TreeWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.deep)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Words having the deep endpoint as a prefix.
    Cone,
    Cocone,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Cone => Side::Cocone,
            Side::Cocone => Side::Cone,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cone => "CONE",
            Side::Cocone => "COCONE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeHalfSpace {
    wall: TreeWall,
    side: Side,
}

impl TreeHalfSpace {
    pub fn new(wall: TreeWall, side: Side) -> Self {
        TreeHalfSpace { wall, side }
    }

    pub fn cone(deep: ReducedWord) -> Result<Self> {
        Ok(Self::new(TreeWall::new(deep)?, Side::Cone))
    }

    pub fn cocone(deep: ReducedWord) -> Result<Self> {
        Ok(Self::new(TreeWall::new(deep)?, Side::Cocone))
    }

    pub fn wall(&self) -> &TreeWall {
        &self.wall
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn complement(&self) -> TreeHalfSpace {
        TreeHalfSpace { wall: self.wall.clone(), side: self.side.flip() }
    }

    pub fn contains(&self, x: &ReducedWord) -> bool {
        x.has_prefix(&self.wall.deep) == (self.side == Side::Cone)
    }

    /// Image under left multiplication by `g`, re-expressed with the longer
    /// image endpoint as deep endpoint.
    pub fn translate(&self, g: &ReducedWord) -> TreeHalfSpace {
        if g.is_identity() {
            return self.clone();
        }
        let deep = g.mul_unchecked(&self.wall.deep);
        let shallow = g.mul_unchecked(&self.wall.shallow_endpoint());
        // adjacent vertices: lengths differ by exactly one
        if deep.len() > shallow.len() {
            TreeHalfSpace { wall: TreeWall { deep }, side: self.side }
        } else {
            TreeHalfSpace { wall: TreeWall { deep: shallow }, side: self.side.flip() }
        }
    }
}

impl fmt::Display for TreeHalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.side, self.wall.deep)
    }
}

/// Cayley tree of `F_n` with its edge walls. The positive half of a wall is
/// its cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CayleyTree {
    group: FreeGroup,
}

impl CayleyTree {
    pub fn new(group: FreeGroup) -> Self {
        CayleyTree { group }
    }

    pub fn of_rank(rank: usize) -> Result<Self> {
        Ok(Self::new(FreeGroup::new(rank)?))
    }
}

impl WallSpace for CayleyTree {
    type Point = ReducedWord;
    type Wall = TreeWall;

    fn in_positive_half(&self, wall: &TreeWall, x: &ReducedWord) -> bool {
        x.has_prefix(&wall.deep)
    }

    /// Edges of the geodesic from `x` to `y`: every prefix of either word
    /// strictly longer than their common prefix.
    fn separating_walls(&self, x: &ReducedWord, y: &ReducedWord) -> BTreeSet<TreeWall> {
        let common = x.common_prefix_len(y);
        (common + 1..=x.len())
            .map(|k| x.prefix(k))
            .chain((common + 1..=y.len()).map(|k| y.prefix(k)))
            .map(|deep| TreeWall { deep })
            .collect()
    }
}

impl GroupWallSpace for CayleyTree {
    type Group = FreeGroup;
    type HalfSpace = TreeHalfSpace;

    fn group(&self) -> &FreeGroup {
        &self.group
    }

    fn contains(&self, h: &TreeHalfSpace, x: &ReducedWord) -> bool {
        h.contains(x)
    }

    fn complement(&self, h: &TreeHalfSpace) -> TreeHalfSpace {
        h.complement()
    }

    fn wall_of(&self, h: &TreeHalfSpace) -> TreeWall {
        h.wall.clone()
    }

    fn half_space_containing(&self, wall: &TreeWall, x: &ReducedWord) -> TreeHalfSpace {
        let side = if x.has_prefix(&wall.deep) { Side::Cone } else { Side::Cocone };
        TreeHalfSpace { wall: wall.clone(), side }
    }

    fn translate(&self, g: &ReducedWord, h: &TreeHalfSpace) -> TreeHalfSpace {
        h.translate(g)
    }
}
