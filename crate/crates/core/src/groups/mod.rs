//! Element arithmetic for the free group, the finite lamp group and their
//! wreath product.

mod free;
mod lamp;
mod wreath;

pub use free::{FreeGroup, Letter, ReducedWord, MAX_RANK};
pub use lamp::{LampElement, LampGroup, MAX_LAMP_ORDER};
pub use wreath::{LampConfig, PointwiseOp, WreathElement, WreathProduct};

use std::fmt::Debug;

/// A group given by a context object; elements are plain values.
///
/// The context is trusted to receive elements it considers valid
/// (see [`DiscreteGroup::contains`]); operations do not re-validate.
pub trait DiscreteGroup {
    type Element: Clone + Ord + Debug;

    fn identity(&self) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    /// Whether `a` is a well-formed element of this group.
    fn contains(&self, a: &Self::Element) -> bool;

    fn is_identity(&self, a: &Self::Element) -> bool {
        *a == self.identity()
    }
}
