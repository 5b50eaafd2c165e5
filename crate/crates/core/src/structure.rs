//! Residual finiteness witnesses, the isomorphism test and periodicity
//! classification for `G(ℤ, I)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::base::{BaseElement, BaseGroup};
use crate::error::{Error, Result};
use crate::ext::{GElement, Group, IntegerSetForm, Quotient, SymmetricSet};

/// Eventual periodicity of a subset of `ℤ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Periodicity {
    Periodic(u64),
    /// `i ∈ I ⟺ i + period ∈ I` for all `|i| > threshold`, and not for a
    /// smaller threshold.
    EventuallyPeriodic { period: u64, threshold: u64 },
    NotApplicable,
}

fn form_of(set: &SymmetricSet) -> Result<IntegerSetForm> {
    set.integer_form()
        .map_err(|e| Error::NoStrategy(format!("unclassifiable descriptor: {e}")))
}

pub fn eventual_periodicity(set: &SymmetricSet) -> Periodicity {
    match set.integer_form() {
        Ok(f) if f.is_periodic() => Periodicity::Periodic(f.period),
        Ok(f) => Periodicity::EventuallyPeriodic {
            period: f.period,
            threshold: f.threshold,
        },
        Err(_) => Periodicity::NotApplicable,
    }
}

/// `G_I ≅ G_J`, which over `ℤ` holds exactly when `I = J`.
pub fn iso_gi(i: &SymmetricSet, j: &SymmetricSet) -> Result<bool> {
    Ok(form_of(i)? == form_of(j)?)
}

/// Multiplication table of a finite group, elements indexed in a fixed order.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    pub elements: Vec<GElement>,
    pub product: Vec<Vec<u32>>,
    pub identity: usize,
}

impl FiniteGroupTable {
    pub fn build(group: &Group, elements: Vec<GElement>) -> Result<FiniteGroupTable> {
        let index: HashMap<&GElement, u32> = elements.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
        let mut product = Vec::with_capacity(elements.len());
        for x in &elements {
            let row = elements
                .iter()
                .map(|y| {
                    index
                        .get(&group.multiply(x, y))
                        .copied()
                        .ok_or_else(|| Error::Inconsistent("element list is not closed".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            product.push(row);
        }
        let identity = index[&group.identity()] as usize;
        Ok(FiniteGroupTable {
            elements,
            product,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &GElement) -> Option<usize> {
        self.elements.iter().position(|x| x == g)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.product[x][y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order()).find(|&y| self.mul(x, y) == self.identity).expect("group table")
    }

    /// The subgroup generated by `gens`, as a membership vector.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }
}

/// All elements of `G(ℤ/n, J)`.
pub fn cyclic_elements(group: &Group) -> Result<Vec<GElement>> {
    let BaseGroup::Cyclic(n) = *group.base() else {
        return Err(Error::mismatch("Z/n"));
    };
    if n > 16 {
        return Err(Error::LimitExceeded {
            what: "modulus",
            value: n as usize,
            limit: 16,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        for center in [false, true] {
            for k in 0..n as i64 {
                out.push(GElement {
                    support: (0..n as i64).filter(|r| mask >> r & 1 == 1).map(BaseElement::Int).collect(),
                    center,
                    translation: BaseElement::Int(k),
                });
            }
        }
    }
    Ok(out)
}

/// A finite quotient `G(ℤ/n, J)` of `G_I` in which `z` survives.
#[derive(Clone, Debug)]
pub struct FiniteQuotientWitness {
    pub modulus: u64,
    /// `J = I mod n` as residues.
    pub image: BTreeSet<u64>,
    pub quotient: Quotient,
    /// Present when the quotient has at most [`TABLE_LIMIT`] elements.
    pub table: Option<FiniteGroupTable>,
}

pub const TABLE_LIMIT: usize = 1024;
/// Largest modulus for which the order `2^(n+1)·n` fits in a `u128`.
pub const WITNESS_MAX_MODULUS: u64 = 100;

impl FiniteQuotientWitness {
    pub fn new(source: &Group, modulus: u64) -> Result<FiniteQuotientWitness> {
        if modulus > WITNESS_MAX_MODULUS {
            return Err(Error::LimitExceeded {
                what: "witness modulus",
                value: modulus as usize,
                limit: WITNESS_MAX_MODULUS as usize,
            });
        }
        let quotient = Quotient::new(source, modulus)?;
        let target = quotient.target();
        let image = match target.set() {
            SymmetricSet::Finite(s) => s.iter().filter_map(|x| x.as_int()).map(|r| r as u64).collect(),
            _ => unreachable!("quotient sets are finite"),
        };
        let small = modulus < 16 && (1usize << (modulus + 1)) * modulus as usize <= TABLE_LIMIT;
        let table = if small {
            Some(FiniteGroupTable::build(target, cyclic_elements(target)?)?)
        } else {
            None
        };
        Ok(FiniteQuotientWitness {
            modulus,
            image,
            quotient,
            table,
        })
    }

    /// `2^(n+1)·n`.
    pub fn order(&self) -> u128 {
        (1u128 << (self.modulus + 1)) * self.modulus as u128
    }

    pub fn z_image(&self) -> Result<GElement> {
        self.quotient.apply(&self.quotient.source().z())
    }

    /// Checks the defining relations of `G(ℤ/n, J)` on the images of the
    /// generators: `a² = z² = tⁿ = 1`, `z` central and
    /// `[a, tʰatʰ⁻¹] = z^χ_J(h)`.
    pub fn verify_relations(&self) -> Result<bool> {
        let src = self.quotient.source();
        let g = self.quotient.target();
        let a = self.quotient.apply(&src.a())?;
        let t = self.quotient.apply(&src.translation(BaseElement::Int(1)))?;
        let z = self.quotient.apply(&src.z())?;
        let one = g.identity();
        let mut ok = g.multiply(&a, &a) == one
            && g.multiply(&z, &z) == one
            && g.power(&t, self.modulus as i64) == one
            && z != one
            && g.multiply(&z, &a) == g.multiply(&a, &z)
            && g.multiply(&z, &t) == g.multiply(&t, &z);
        for h in 0..self.modulus as i64 {
            let th = g.power(&t, h);
            let conj = g.conjugate(&th, &a);
            let comm = g.multiply(&g.multiply(&a, &conj), &g.multiply(&g.inverse(&a), &g.inverse(&conj)));
            let expected = if self.image.contains(&(h as u64)) { z.clone() } else { one.clone() };
            ok &= comm == expected;
        }
        Ok(ok)
    }

    /// Order of the subgroup generated by the images of `a`, `t`, `z`.
    pub fn generated_order(&self) -> Result<usize> {
        let Some(table) = &self.table else {
            return Err(Error::LimitExceeded {
                what: "quotient order",
                value: self.order() as usize,
                limit: TABLE_LIMIT,
            });
        };
        let src = self.quotient.source();
        let gens = [src.a(), src.translation(BaseElement::Int(1)), src.z()]
            .iter()
            .map(|g| {
                let img = self.quotient.apply(g)?;
                table.index_of(&img).ok_or_else(|| Error::Inconsistent("image not in table".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(table.closure(&gens).iter().filter(|&&b| b).count())
    }
}

#[derive(Clone, Debug)]
pub struct ResidualFiniteness {
    pub residually_finite: bool,
    pub witness: Option<FiniteQuotientWitness>,
}

/// `G_I` is residually finite exactly when `I` is a union of cosets of some
/// `nℤ`; the witness uses the minimal such `n`, up to [`WITNESS_MAX_MODULUS`].
pub fn is_residually_finite_gi(set: &SymmetricSet) -> Result<ResidualFiniteness> {
    let form = form_of(set)?;
    if !form.is_periodic() {
        return Ok(ResidualFiniteness {
            residually_finite: false,
            witness: None,
        });
    }
    let group = Group::over_integers(set.clone())?;
    let witness = if form.period <= WITNESS_MAX_MODULUS {
        Some(FiniteQuotientWitness::new(&group, form.period)?)
    } else {
        None
    };
    Ok(ResidualFiniteness {
        residually_finite: true,
        witness,
    })
}

/// One normal subgroup `K` of a witness quotient with `z ∉ K`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuotientSize {
    pub kernel_order: usize,
    pub quotient_order: usize,
}

pub const EXPERIMENT_MAX_MODULUS: u64 = 3;

/// Every normal subgroup of the witness `G(ℤ/n, J)` avoiding the image of
/// `z`, as kernel and quotient orders, sorted by quotient order.
pub fn quotient_experiment(witness: &FiniteQuotientWitness) -> Result<Vec<QuotientSize>> {
    if witness.modulus > EXPERIMENT_MAX_MODULUS {
        return Err(Error::LimitExceeded {
            what: "experiment modulus",
            value: witness.modulus as usize,
            limit: EXPERIMENT_MAX_MODULUS as usize,
        });
    }
    let table = witness.table.as_ref().expect("small moduli have tables");
    let n = table.order();
    let z = table.index_of(&witness.z_image()?).expect("z in table");
    let inverses: Vec<usize> = (0..n).map(|x| table.inverse(x)).collect();
    let bits = |v: &[bool]| v.iter().enumerate().fold(0u128, |acc, (i, &b)| acc | (b as u128) << i);
    let normal_closure = |gens: &[usize]| -> u128 {
        let mut conj = Vec::new();
        for &g in gens {
            for c in 0..n {
                conj.push(table.mul(table.mul(c, g), inverses[c]));
            }
        }
        bits(&table.closure(&conj))
    };
    let singles: Vec<u128> = (0..n).map(|g| normal_closure(&[g])).collect();
    let mut all: BTreeSet<u128> = BTreeSet::from([1u128 << table.identity]);
    let mut frontier: Vec<u128> = all.iter().copied().collect();
    while let Some(k) = frontier.pop() {
        for &s in &singles {
            if s & !k == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| (k | s) >> i & 1 == 1).collect();
            let joined = bits(&table.closure(&members));
            if all.insert(joined) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<QuotientSize> = all
        .into_iter()
        .filter(|k| k >> z & 1 == 0)
        .map(|k| {
            let kernel_order = k.count_ones() as usize;
            QuotientSize {
                kernel_order,
                quotient_order: n / kernel_order,
            }
        })
        .collect();
    out.sort_by_key(|q| (q.quotient_order, q.kernel_order));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(eventual_periodicity(&SymmetricSet::empty()), Periodicity::Periodic(1));
        assert_eq!(eventual_periodicity(&SymmetricSet::periodic(4, [1, 3])), Periodicity::Periodic(2));
        assert_eq!(
            eventual_periodicity(&SymmetricSet::finite_integers([5])),
            Periodicity::EventuallyPeriodic { period: 1, threshold: 5 }
        );
    }

    #[test]
    fn residual_finiteness_examples() {
        let rf = is_residually_finite_gi(&SymmetricSet::empty()).unwrap();
        assert!(rf.residually_finite);
        assert_eq!(rf.witness.unwrap().modulus, 1);
        let rf = is_residually_finite_gi(&SymmetricSet::periodic(2, [1])).unwrap();
        let w = rf.witness.unwrap();
        assert_eq!(w.modulus, 2);
        assert_eq!(w.order(), 16);
        assert_eq!(w.table.as_ref().unwrap().order(), 16);
        assert!(w.verify_relations().unwrap());
        assert!(!is_residually_finite_gi(&SymmetricSet::finite_integers([1])).unwrap().residually_finite);
    }

    #[test]
    fn iso_examples() {
        assert!(iso_gi(&SymmetricSet::periodic(2, [1]), &SymmetricSet::periodic(4, [1, 3])).unwrap());
        assert!(!iso_gi(&SymmetricSet::finite_integers([1]), &SymmetricSet::finite_integers([2])).unwrap());
    }

    #[test]
    fn experiment_runs() {
        let w = is_residually_finite_gi(&SymmetricSet::periodic(2, [1])).unwrap().witness.unwrap();
        let sizes = quotient_experiment(&w).unwrap();
        assert_eq!(sizes.last().unwrap().quotient_order, 16);
        assert!(sizes.iter().all(|q| q.quotient_order * q.kernel_order == 16));
    }
}
