use crate::base::{BaseElement, BaseGroup, Letter};
use crate::ext::group::Support;

/// An element of the lamplighter `C₂ ≀ H`: lit lamps and a translation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    pub support: Support,
    pub translation: BaseElement,
}

/// Arithmetic in `C₂ ≀ H`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Wreath {
    pub base: BaseGroup,
}

impl Wreath {
    pub fn new(base: BaseGroup) -> Wreath {
        Wreath { base }
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement {
            support: Support::new(),
            translation: self.base.identity(),
        }
    }

    pub fn lamp(&self, h: BaseElement) -> WreathElement {
        WreathElement {
            support: [h].into_iter().collect(),
            translation: self.base.identity(),
        }
    }

    pub fn translation(&self, h: BaseElement) -> WreathElement {
        WreathElement {
            support: Support::new(),
            translation: h,
        }
    }

    fn shift(&self, k: &BaseElement, s: &Support) -> Support {
        s.iter().map(|g| self.base.mul(k, g)).collect()
    }

    pub fn multiply(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        let moved = self.shift(&x.translation, &y.support);
        WreathElement {
            support: x.support.symmetric_difference(&moved).cloned().collect(),
            translation: self.base.mul(&x.translation, &y.translation),
        }
    }

    pub fn inverse(&self, x: &WreathElement) -> WreathElement {
        let k = self.base.inv(&x.translation);
        WreathElement {
            support: self.shift(&k, &x.support),
            translation: k,
        }
    }

    /// `c · x · c⁻¹`.
    pub fn conjugate(&self, c: &WreathElement, x: &WreathElement) -> WreathElement {
        self.multiply(&self.multiply(c, x), &self.inverse(c))
    }

    pub fn is_identity(&self, x: &WreathElement) -> bool {
        x.support.is_empty() && self.base.is_identity(&x.translation)
    }

    /// `x · a` in place.
    pub fn push_lamp(&self, x: &mut WreathElement) {
        let p = x.translation.clone();
        if !x.support.remove(&p) {
            x.support.insert(p);
        }
    }

    pub fn push_step(&self, x: &mut WreathElement, l: Letter) {
        x.translation = self.base.mul(&x.translation, &self.base.generator(l));
    }

    pub fn power(&self, x: &WreathElement, n: i64) -> WreathElement {
        let step = if n < 0 { self.inverse(x) } else { x.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &step);
        }
        acc
    }
}
