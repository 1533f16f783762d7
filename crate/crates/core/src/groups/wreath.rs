use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use super::{DiscreteGroup, FreeGroup, LampElement, LampGroup, ReducedWord};
use crate::error::{Error, Result};

/// Finitely supported function from base-group positions to lamp elements.
///
/// Only non-identity values are stored, keyed in the canonical order of the
/// position type (shortlex for reduced words).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LampConfig<P = ReducedWord> {
    entries: BTreeMap<P, LampElement>,
}

impl<P: Ord> Default for LampConfig<P> {
    fn default() -> Self {
        LampConfig { entries: BTreeMap::new() }
    }
}

impl<P: Ord + Clone> LampConfig<P> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from explicit entries. Identity values and repeated positions
    /// are rejected.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, LampElement)>,
        P: fmt::Display,
    {
        let mut map = BTreeMap::new();
        for (pos, value) in entries {
            if value.is_identity() {
                return Err(Error::IdentityLamp(pos.to_string()));
            }
            match map.entry(pos) {
                btree_map::Entry::Occupied(e) => return Err(Error::DuplicatePosition(e.key().to_string())),
                btree_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
            }
        }
        Ok(LampConfig { entries: map })
    }

    /// Single lamp; empty config when `value` is the identity.
    pub fn single(pos: P, value: LampElement) -> Self {
        let mut config = Self::new();
        config.set(pos, value);
        config
    }

    pub fn get(&self, pos: &P) -> LampElement {
        self.entries.get(pos).copied().unwrap_or(LampElement::IDENTITY)
    }

    /// Overwrite one position, dropping identity values.
    pub(crate) fn set(&mut self, pos: P, value: LampElement) {
        if value.is_identity() {
            self.entries.remove(&pos);
        } else {
            self.entries.insert(pos, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&P, LampElement)> {
        self.entries.iter().map(|(p, v)| (p, *v))
    }

    pub fn support(&self) -> impl Iterator<Item = &P> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Restriction to the positions satisfying `keep`.
    pub fn restrict<F>(&self, mut keep: F) -> Self
    where
        F: FnMut(&P) -> bool,
    {
        let entries = self
            .entries
            .iter()
            .filter(|(p, _)| keep(p))
            .map(|(p, v)| (p.clone(), *v))
            .collect();
        LampConfig { entries }
    }
}

impl<P: fmt::Display> fmt::Display for LampConfig<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}:{v}")?;
        }
        f.write_str("}")
    }
}

/// Element `λg` of the wreath product: a lamp configuration and a position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement<P = ReducedWord> {
    lamps: LampConfig<P>,
    position: P,
}

impl<P> WreathElement<P> {
    pub fn new(lamps: LampConfig<P>, position: P) -> Self {
        WreathElement { lamps, position }
    }

    pub fn lamps(&self) -> &LampConfig<P> {
        &self.lamps
    }

    pub fn position(&self) -> &P {
        &self.position
    }

    pub fn into_parts(self) -> (LampConfig<P>, P) {
        (self.lamps, self.position)
    }
}

impl<P: fmt::Display> fmt::Display for WreathElement<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lamps, self.position)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOp {
    /// `(λ1 λ2)(x) = λ1(x) λ2(x)`
    Mul,
    /// `λ1⁻¹(x) = λ1(x)⁻¹`; the second operand is ignored.
    Inv,
}

/// The wreath product `H ≀ G = H^(G) ⋊ G` with `G` acting on configurations
/// by left translation of positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathProduct<G = FreeGroup> {
    base: G,
    lamps: LampGroup,
}

impl WreathProduct<FreeGroup> {
    /// `H ≀ F_rank` with `H` given.
    pub fn over_free(rank: usize, lamps: LampGroup) -> Result<Self> {
        Ok(WreathProduct::new(FreeGroup::new(rank)?, lamps))
    }
}

impl<G> WreathProduct<G>
where
    G: DiscreteGroup,
    G::Element: fmt::Display,
{
    pub fn new(base: G, lamps: LampGroup) -> Self {
        WreathProduct { base, lamps }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn lamps(&self) -> &LampGroup {
        &self.lamps
    }

    pub fn identity(&self) -> WreathElement<G::Element> {
        WreathElement::new(LampConfig::new(), self.base.identity())
    }

    /// Validate positions against the base group and values against the
    /// lamp group.
    pub fn check_config(&self, config: &LampConfig<G::Element>) -> Result<()> {
        for (pos, value) in config.iter() {
            self.check_position(pos)?;
            self.lamps.check_element(value)?;
        }
        Ok(())
    }

    pub fn check_position(&self, pos: &G::Element) -> Result<()> {
        if self.base.contains(pos) {
            Ok(())
        } else {
            Err(Error::ForeignElement(pos.to_string()))
        }
    }

    pub fn check(&self, x: &WreathElement<G::Element>) -> Result<()> {
        self.check_position(&x.position)?;
        self.check_config(&x.lamps)
    }

    /// Checked pointwise operation on configurations.
    pub fn config_pointwise(
        &self,
        op: PointwiseOp,
        left: &LampConfig<G::Element>,
        right: Option<&LampConfig<G::Element>>,
    ) -> Result<LampConfig<G::Element>> {
        self.check_config(left)?;
        if let Some(r) = right {
            self.check_config(r)?;
        }
        Ok(match op {
            PointwiseOp::Mul => match right {
                Some(r) => self.config_mul(left, r),
                None => left.clone(),
            },
            PointwiseOp::Inv => self.config_inv(left),
        })
    }

    /// Pointwise product, left operand's value on the left.
    pub fn config_mul(&self, left: &LampConfig<G::Element>, right: &LampConfig<G::Element>) -> LampConfig<G::Element> {
        let mut out = left.clone();
        for (pos, r) in right.iter() {
            let l = left.get(pos);
            out.set(pos.clone(), self.lamps.mul(l, r));
        }
        out
    }

    pub fn config_inv(&self, config: &LampConfig<G::Element>) -> LampConfig<G::Element> {
        let entries = config
            .entries
            .iter()
            .map(|(p, v)| (p.clone(), self.lamps.inverse(*v)))
            .collect();
        LampConfig { entries }
    }

    /// `λ1⁻¹ λ2`, evaluated pointwise as `λ1(x)⁻¹ λ2(x)`.
    pub fn config_left_divide(
        &self,
        left: &LampConfig<G::Element>,
        right: &LampConfig<G::Element>,
    ) -> LampConfig<G::Element> {
        self.config_mul(&self.config_inv(left), right)
    }

    /// Translate a configuration: `(g·λ)(x) = λ(g⁻¹x)`.
    pub fn shift(&self, g: &G::Element, config: &LampConfig<G::Element>) -> LampConfig<G::Element> {
        if self.base.is_identity(g) {
            return config.clone();
        }
        let entries = config
            .entries
            .iter()
            .map(|(p, v)| (self.base.mul(g, p), *v))
            .collect();
        LampConfig { entries }
    }

    /// `(λ1, g1)(λ2, g2) = (λ1 · g1λ2, g1g2)`
    pub fn mul(&self, a: &WreathElement<G::Element>, b: &WreathElement<G::Element>) -> WreathElement<G::Element> {
        let lamps = self.config_mul(&a.lamps, &self.shift(&a.position, &b.lamps));
        WreathElement::new(lamps, self.base.mul(&a.position, &b.position))
    }

    /// `(λ, g)⁻¹ = (g⁻¹λ⁻¹, g⁻¹)`
    pub fn inverse(&self, a: &WreathElement<G::Element>) -> WreathElement<G::Element> {
        let g_inv = self.base.inverse(&a.position);
        let lamps = self.shift(&g_inv, &self.config_inv(&a.lamps));
        WreathElement::new(lamps, g_inv)
    }

    pub fn try_mul(
        &self,
        a: &WreathElement<G::Element>,
        b: &WreathElement<G::Element>,
    ) -> Result<WreathElement<G::Element>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Pure configuration `(λ, 1)`.
    pub fn lamps_only(&self, config: LampConfig<G::Element>) -> WreathElement<G::Element> {
        WreathElement::new(config, self.base.identity())
    }

    /// Pure translation `(1, g)`.
    pub fn translation(&self, g: G::Element) -> WreathElement<G::Element> {
        WreathElement::new(LampConfig::new(), g)
    }
}

impl<G> DiscreteGroup for WreathProduct<G>
where
    G: DiscreteGroup,
    G::Element: fmt::Display,
{
    type Element = WreathElement<G::Element>;

    fn identity(&self) -> Self::Element {
        WreathProduct::identity(self)
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        WreathProduct::mul(self, a, b)
    }

    fn inverse(&self, a: &Self::Element) -> Self::Element {
        WreathProduct::inverse(self, a)
    }

    fn contains(&self, a: &Self::Element) -> bool {
        self.check(a).is_ok()
    }
}
