use std::collections::BTreeSet;
use std::fmt;

use crate::base::{BaseElement, BaseGroup, Letter};
use crate::error::{Error, Result};
use crate::ext::set::SymmetricSet;
use crate::ext::wreath::WreathElement;

/// A finite set of lamp positions.
pub type Support = BTreeSet<BaseElement>;

/// An element of the kernel `N(H,I)`: the lamps in descending order followed
/// by `z^center`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NElement {
    pub support: Support,
    pub center: bool,
}

/// An element of `G(H,I)`, the kernel part followed by a translation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GElement {
    pub support: Support,
    pub center: bool,
    pub translation: BaseElement,
}

impl GElement {
    pub fn kernel_part(&self) -> NElement {
        NElement {
            support: self.support.clone(),
            center: self.center,
        }
    }

    pub fn from_parts(n: NElement, translation: BaseElement) -> GElement {
        GElement {
            support: n.support,
            center: n.center,
            translation,
        }
    }
}

/// The central extension `G(H,I)` of the lamplighter `C₂ ≀ H`.
#[derive(Clone, Debug, PartialEq)]
pub struct Group {
    base: BaseGroup,
    set: SymmetricSet,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({}, {})", self.base, self.set.render(&self.base))
    }
}

impl Group {
    pub fn new(base: BaseGroup, set: SymmetricSet) -> Result<Group> {
        set.validate(&base)?;
        Ok(Group { base, set })
    }

    /// `G(ℤ, I)`.
    pub fn over_integers(set: SymmetricSet) -> Result<Group> {
        Group::new(BaseGroup::Integers, set)
    }

    pub fn base(&self) -> &BaseGroup {
        &self.base
    }

    pub fn set(&self) -> &SymmetricSet {
        &self.set
    }

    pub fn chi(&self, g: &BaseElement) -> bool {
        self.set.contains(g)
    }

    /// `Σ_{g∈u, h∈v, g<h} χ(g⁻¹h) mod 2`.
    pub fn omega(&self, u: &Support, v: &Support) -> bool {
        let mut acc = false;
        for g in u {
            for h in v.range((std::ops::Bound::Excluded(g), std::ops::Bound::Unbounded)) {
                acc ^= self.chi(&self.base.ldiv(g, h));
            }
        }
        acc
    }

    pub fn n_multiply(&self, x: &NElement, y: &NElement) -> NElement {
        NElement {
            support: x.support.symmetric_difference(&y.support).cloned().collect(),
            center: x.center ^ y.center ^ self.omega(&x.support, &y.support),
        }
    }

    pub fn n_inverse(&self, x: &NElement) -> NElement {
        NElement {
            support: x.support.clone(),
            center: x.center ^ self.omega(&x.support, &x.support),
        }
    }

    /// `k · x · k⁻¹` for `x ∈ N`.
    pub fn translate_n(&self, k: &BaseElement, x: &NElement) -> NElement {
        if self.base.is_identity(k) {
            return x.clone();
        }
        let moved: Vec<BaseElement> = x.support.iter().rev().map(|g| self.base.mul(k, g)).collect();
        let mut center = x.center;
        if !self.base.translations_preserve_order() {
            for i in 0..moved.len() {
                for j in i + 1..moved.len() {
                    if moved[i] < moved[j] {
                        center ^= self.chi(&self.base.ldiv(&moved[i], &moved[j]));
                    }
                }
            }
        }
        NElement {
            support: moved.into_iter().collect(),
            center,
        }
    }

    pub fn multiply(&self, x: &GElement, y: &GElement) -> GElement {
        let shifted = self.translate_n(&x.translation, &y.kernel_part());
        let n = self.n_multiply(&x.kernel_part(), &shifted);
        GElement::from_parts(n, self.base.mul(&x.translation, &y.translation))
    }

    pub fn inverse(&self, x: &GElement) -> GElement {
        let k = self.base.inv(&x.translation);
        let n = self.translate_n(&k, &self.n_inverse(&x.kernel_part()));
        GElement::from_parts(n, k)
    }

    /// `c · x · c⁻¹`.
    pub fn conjugate(&self, c: &GElement, x: &GElement) -> GElement {
        self.multiply(&self.multiply(c, x), &self.inverse(c))
    }

    pub fn identity(&self) -> GElement {
        GElement {
            support: Support::new(),
            center: false,
            translation: self.base.identity(),
        }
    }

    pub fn z(&self) -> GElement {
        GElement {
            center: true,
            ..self.identity()
        }
    }

    /// The lamp `a_h = h a h⁻¹`.
    pub fn lamp(&self, h: BaseElement) -> GElement {
        GElement {
            support: [h].into_iter().collect(),
            ..self.identity()
        }
    }

    pub fn a(&self) -> GElement {
        self.lamp(self.base.identity())
    }

    pub fn translation(&self, h: BaseElement) -> GElement {
        GElement {
            translation: h,
            ..self.identity()
        }
    }

    pub fn is_identity(&self, x: &GElement) -> bool {
        x.support.is_empty() && !x.center && self.base.is_identity(&x.translation)
    }

    pub fn in_kernel(&self, x: &GElement) -> bool {
        self.base.is_identity(&x.translation)
    }

    pub fn check(&self, x: &GElement) -> Result<()> {
        self.base.check(&x.translation)?;
        for g in &x.support {
            self.base.check(g)?;
        }
        Ok(())
    }

    /// Whether `[x, y]` is trivial, for `x, y ∈ N`. The commutator is always
    /// central; this reports its `z`-exponent.
    pub fn commutator_central(&self, x: &NElement, y: &NElement) -> bool {
        self.omega(&x.support, &y.support) ^ self.omega(&y.support, &x.support)
    }

    /// The image in `C₂ ≀ H`.
    pub fn tau(&self, x: &GElement) -> WreathElement {
        WreathElement {
            support: x.support.clone(),
            translation: x.translation.clone(),
        }
    }

    /// `x · a` in place.
    pub fn push_lamp(&self, x: &mut GElement) {
        let p = x.translation.clone();
        for q in x.support.range(..&p) {
            x.center ^= self.chi(&self.base.ldiv(q, &p));
        }
        if !x.support.remove(&p) {
            x.support.insert(p);
        }
    }

    /// `x · s` in place for a basis letter `s` of `H`.
    pub fn push_step(&self, x: &mut GElement, l: Letter) {
        x.translation = self.base.mul(&x.translation, &self.base.generator(l));
    }

    pub fn push_center(&self, x: &mut GElement) {
        x.center = !x.center;
    }

    /// `x^n` by repeated squaring.
    pub fn power(&self, x: &GElement, n: i64) -> GElement {
        let mut base = if n < 0 { self.inverse(x) } else { x.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn require_integers(&self, what: &str) -> Result<()> {
        if self.base == BaseGroup::Integers {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{what} needs base Z, not {}", self.base)))
        }
    }
}
