use std::collections::BTreeSet;

use crate::base::{BaseElement, BaseGroup, FreeWord, Letter};
use crate::error::{Error, Result};
use crate::ext::group::{GElement, Group, NElement};
use crate::ext::set::SymmetricSet;

/// An injective homomorphism of base groups with source `ℤ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Injection {
    /// `n ↦ factor·n` into `ℤ`.
    Scale(i64),
    /// `n ↦ letter^n` into the free group of the given rank.
    FreeLetter { rank: usize, letter: Letter },
}

/// The embedding `G(ℤ, I) → G(H, ι(I))` induced by an injection `ι`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Group,
    target: Group,
    injection: Injection,
}

impl Embedding {
    pub fn new(source: &Group, injection: Injection) -> Result<Embedding> {
        source.require_integers("an induced embedding")?;
        let set = source.set();
        let target_set = match injection {
            Injection::Scale(0) => return Err(Error::Unsupported("scaling by 0 is not injective".into())),
            Injection::Scale(d) => scale_set(set, d)?,
            Injection::FreeLetter { rank, letter } => {
                if letter.index() >= rank {
                    return Err(Error::mismatch(format!("F_{rank}")));
                }
                match set {
                    SymmetricSet::Finite(s) => SymmetricSet::Finite(
                        s.iter()
                            .map(|x| BaseElement::Word(FreeWord::power(letter, x.as_int().unwrap_or(0))))
                            .collect(),
                    ),
                    other => {
                        let inner = other.clone();
                        SymmetricSet::unchecked(move |x| match x {
                            BaseElement::Word(w) => {
                                let base = letter.index();
                                w.letters().iter().all(|l| l.index() == base)
                                    && inner.contains(&BaseElement::Int(w.abelianize(rank)[base] * letter.sign()))
                            }
                            _ => false,
                        })
                    }
                }
            }
        };
        let target_base = match injection {
            Injection::Scale(_) => BaseGroup::Integers,
            Injection::FreeLetter { rank, .. } => BaseGroup::Free(rank),
        };
        Ok(Embedding {
            source: source.clone(),
            target: Group::new(target_base, target_set)?,
            injection,
        })
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn map_base(&self, x: &BaseElement) -> BaseElement {
        let n = x.as_int().expect("source base is Z");
        match self.injection {
            Injection::Scale(d) => BaseElement::Int(n * d),
            Injection::FreeLetter { letter, .. } => BaseElement::Word(FreeWord::power(letter, n)),
        }
    }

    pub fn apply(&self, g: &GElement) -> Result<GElement> {
        self.source.check(g)?;
        Ok(multiply_out(&self.target, g, |x| self.map_base(x)))
    }
}

fn scale_set(set: &SymmetricSet, d: i64) -> Result<SymmetricSet> {
    let m = d.unsigned_abs();
    let scale_res = |p: u64, r: &BTreeSet<u64>| -> BTreeSet<u64> {
        r.iter()
            .map(|&x| ((x as i128 * d as i128).rem_euclid((m * p) as i128)) as u64)
            .collect()
    };
    Ok(match set {
        SymmetricSet::Finite(s) => SymmetricSet::Finite(
            s.iter()
                .map(|x| BaseElement::Int(x.as_int().unwrap_or(0) * d))
                .collect(),
        ),
        SymmetricSet::Periodic { period, residues } => SymmetricSet::Periodic {
            period: m * period,
            residues: scale_res(*period, residues),
        },
        SymmetricSet::EventuallyPeriodic {
            threshold,
            explicit,
            period,
            residues,
        } => SymmetricSet::EventuallyPeriodic {
            threshold: m * threshold,
            explicit: explicit.iter().map(|x| x * d).collect(),
            period: m * period,
            residues: scale_res(*period, residues),
        },
        SymmetricSet::Unchecked(p) => {
            let p = p.clone();
            SymmetricSet::unchecked(move |x| match x.as_int() {
                Some(n) if n % d == 0 => p.call(&BaseElement::Int(n / d)),
                _ => false,
            })
        }
        SymmetricSet::AbelianizationPullback { .. } => return Err(Error::mismatch("Z")),
    })
}

/// Image of `g` under the homomorphism sending `a_h ↦ a_{f(h)}`, `z ↦ z` and
/// `h ↦ f(h)`, computed by multiplying the images of the normal-form factors.
fn multiply_out<F: Fn(&BaseElement) -> BaseElement>(target: &Group, g: &GElement, f: F) -> GElement {
    let mut n = NElement::default();
    for h in g.support.iter().rev() {
        let lamp = NElement {
            support: [f(h)].into_iter().collect(),
            center: false,
        };
        n = target.n_multiply(&n, &lamp);
    }
    n.center ^= g.center;
    GElement::from_parts(n, f(&g.translation))
}

/// The reduction `G(ℤ, I) → G(ℤ/n, I mod n)`, defined when `I` is a union of
/// cosets of `nℤ`.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: Group,
    target: Group,
    modulus: u64,
}

impl Quotient {
    pub fn new(source: &Group, modulus: u64) -> Result<Quotient> {
        source.require_integers("a finite quotient")?;
        if modulus == 0 {
            return Err(Error::Unsupported("modulus must be positive".into()));
        }
        let form = source.set().integer_form()?;
        if !form.is_periodic() || modulus % form.period != 0 {
            return Err(Error::Unsupported(format!(
                "the set is not a union of cosets of {modulus}Z"
            )));
        }
        let image: BTreeSet<BaseElement> = (0..modulus as i64)
            .filter(|&r| form.contains(r))
            .map(BaseElement::Int)
            .collect();
        Ok(Quotient {
            source: source.clone(),
            target: Group::new(BaseGroup::Cyclic(modulus), SymmetricSet::Finite(image))?,
            modulus,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn apply(&self, g: &GElement) -> Result<GElement> {
        self.source.check(g)?;
        let m = self.modulus as i64;
        Ok(multiply_out(&self.target, g, |x| {
            BaseElement::Int(x.as_int().expect("source base is Z").rem_euclid(m))
        }))
    }
}
