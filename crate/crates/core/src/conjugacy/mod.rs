//! Conjugacy in `C₂ ≀ ℤ`, in `G(H, I)`, and conjugacy-minimal elements of
//! `C₂ ≀ F_r`.

pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};

use crate::base::{BaseElement, BaseGroup, FreeWord, Letter, TreeHull};
use crate::error::{Error, Result};
use crate::ext::{GElement, Group, IntegerSetForm, Support, SymmetricSet, Wreath, WreathElement};

/// A conjugator `c` with `c · g · c⁻¹ = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate<C> {
    pub conjugator: C,
    pub verified: bool,
}

fn int_support(s: &Support) -> Result<Vec<i64>> {
    s.iter()
        .map(|x| x.as_int().ok_or_else(|| Error::mismatch("Z")))
        .collect()
}

fn int_of(x: &BaseElement) -> Result<i64> {
    x.as_int().ok_or_else(|| Error::mismatch("Z"))
}

/// Solves `(1 + σ^k) v = d` for a lamp configuration `d` whose lamp count
/// is even in every residue class mod `|k|`.
fn transfer_solution(d: &BTreeSet<i64>, k: i64) -> BTreeSet<i64> {
    let m = k.abs();
    let mut classes: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &q in d {
        classes.entry(q.rem_euclid(m)).or_default().push(q);
    }
    let mut v = BTreeSet::new();
    for pts in classes.values() {
        for pair in pts.chunks(2) {
            let (lo, hi) = (pair[0], pair[1]);
            let mut p = if k > 0 { lo } else { lo + m };
            let end = if k > 0 { hi } else { hi + m };
            while p < end {
                v.insert(p);
                p += m;
            }
        }
    }
    v
}

/// Decides conjugacy in `C₂ ≀ ℤ` and returns a conjugator when one exists.
pub fn wreath_conjugate_decide_z(
    g: &WreathElement,
    h: &WreathElement,
) -> Result<Option<ConjugacyCertificate<WreathElement>>> {
    let wr = Wreath::new(BaseGroup::Integers);
    let (k, k2) = (int_of(&g.translation)?, int_of(&h.translation)?);
    let (u, u2) = (int_support(&g.support)?, int_support(&h.support)?);
    if k != k2 {
        return Ok(None);
    }
    let candidate = if k == 0 {
        if u.len() != u2.len() {
            return Ok(None);
        }
        let m = match (u.first(), u2.first()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        };
        if u.iter().zip(&u2).any(|(a, b)| a + m != *b) {
            return Ok(None);
        }
        wr.translation(BaseElement::Int(m))
    } else {
        let n = k.abs();
        let parity = |s: &[i64]| {
            let mut p = vec![false; n as usize];
            for x in s {
                p[x.rem_euclid(n) as usize] ^= true;
            }
            p
        };
        let (pg, ph) = (parity(&u), parity(&u2));
        let Some(m) = (0..n).find(|&m| (0..n).all(|r| ph[r as usize] == pg[(r - m).rem_euclid(n) as usize]))
        else {
            return Ok(None);
        };
        let shifted: BTreeSet<i64> = u.iter().map(|x| x + m).collect();
        let target: BTreeSet<i64> = u2.iter().copied().collect();
        let d: BTreeSet<i64> = shifted.symmetric_difference(&target).copied().collect();
        WreathElement {
            support: transfer_solution(&d, k).into_iter().map(BaseElement::Int).collect(),
            translation: BaseElement::Int(m),
        }
    };
    let verified = wr.conjugate(&candidate, g) == *h;
    if !verified {
        return Err(Error::Inconsistent("constructed conjugator does not verify".into()));
    }
    Ok(Some(ConjugacyCertificate {
        conjugator: candidate,
        verified,
    }))
}

/// Parity of `Σ_n χ(n - k)` over a multiset of integer positions.
fn odd_at(points: &[i64], form: &IntegerSetForm, k: i64) -> bool {
    points.iter().filter(|&&n| form.contains(n - k)).count() % 2 == 1
}

/// A shift `k` making `Σ_n χ(n - k)` odd, if any. The function of `k` is
/// periodic outside a window around the points, so a bounded scan is exact.
fn int_twist_scan(points: &[i64], form: &IntegerSetForm) -> Option<i64> {
    if points.is_empty() {
        return None;
    }
    let p = form.period as i64;
    let range = if form.is_periodic() {
        0..=p - 1
    } else {
        let lo = *points.iter().min().unwrap();
        let hi = *points.iter().max().unwrap();
        let pad = form.threshold as i64 + p + 1;
        lo - pad..=hi + pad
    };
    range.into_iter().find(|&k| odd_at(points, form, k))
}

fn word_with_abelianization(v: &[i64]) -> FreeWord {
    let mut w = FreeWord::identity();
    for (i, &c) in v.iter().enumerate() {
        w = w.mul(&FreeWord::power(Letter::new(i, false), c));
    }
    w
}

/// An element `g ∈ H` with `|g⁻¹·supp(x) ∩ I|` odd, if one exists. Conjugating
/// by the lamp `a_g` then sends `x` to `x·z`.
pub fn z_twist_witness(group: &Group, x: &GElement) -> Result<Option<BaseElement>> {
    if !group.in_kernel(x) {
        return Err(Error::NotInKernel);
    }
    group.check(x)?;
    let base = *group.base();
    if !base.is_torsion_free() {
        return Err(Error::Unsupported(format!("the twist test needs a torsion-free base, not {base}")));
    }
    if x.support.is_empty() {
        return Ok(None);
    }
    let set = group.set();
    let odd = |g: &BaseElement| {
        x.support
            .iter()
            .filter(|n| group.chi(&base.ldiv(g, n)))
            .count()
            % 2
            == 1
    };
    match (base, set) {
        (_, SymmetricSet::Unchecked(_)) => Err(Error::NoStrategy("unchecked set".into())),
        (BaseGroup::Integers, _) => {
            let pts = int_support(&x.support)?;
            Ok(int_twist_scan(&pts, &set.integer_form()?).map(BaseElement::Int))
        }
        (_, SymmetricSet::Finite(s)) => {
            for n in &x.support {
                for i in s {
                    let g = base.mul(n, &base.inv(i));
                    if odd(&g) {
                        return Ok(Some(g));
                    }
                }
            }
            Ok(None)
        }
        (BaseGroup::Free(rank), SymmetricSet::AbelianizationPullback { inner, .. }) => {
            let ab: Vec<Vec<i64>> = x
                .support
                .iter()
                .map(|n| n.as_word().expect("free base").abelianize(rank))
                .collect();
            let found = match inner.as_ref() {
                SymmetricSet::Finite(j) => {
                    let js: Vec<Vec<i64>> = j
                        .iter()
                        .map(|e| match e {
                            BaseElement::Int(n) => vec![*n],
                            BaseElement::Vector(v) => v.clone(),
                            BaseElement::Word(_) => Vec::new(),
                        })
                        .collect();
                    let mut out = None;
                    'outer: for n in &ab {
                        for jv in &js {
                            let cand: Vec<i64> = n.iter().zip(jv).map(|(a, b)| a - b).collect();
                            let count = ab
                                .iter()
                                .filter(|m| {
                                    let diff: Vec<i64> = m.iter().zip(&cand).map(|(a, b)| a - b).collect();
                                    inner.contains(&if rank == 1 {
                                        BaseElement::Int(diff[0])
                                    } else {
                                        BaseElement::Vector(diff)
                                    })
                                })
                                .count();
                            if count % 2 == 1 {
                                out = Some(cand);
                                break 'outer;
                            }
                        }
                    }
                    out
                }
                SymmetricSet::Periodic { .. } | SymmetricSet::EventuallyPeriodic { .. } if rank == 1 => {
                    let pts: Vec<i64> = ab.iter().map(|v| v[0]).collect();
                    int_twist_scan(&pts, &inner.integer_form()?).map(|k| vec![k])
                }
                _ => return Err(Error::NoStrategy("pullback of this descriptor".into())),
            };
            Ok(found.map(|v| BaseElement::Word(word_with_abelianization(&v))))
        }
        _ => Err(Error::NoStrategy(format!("twist test for {} over {base}", set.render(&base)))),
    }
}

/// Whether `x ∼ x·z` for `x` in the kernel.
pub fn is_conj_z_twist(group: &Group, x: &GElement) -> Result<bool> {
    if !group.in_kernel(x) {
        return Err(Error::NotInKernel);
    }
    if *group.base() == BaseGroup::Integers && group.set().is_structured() {
        let form = group.set().integer_form()?;
        if !form.is_periodic() {
            // Every non-central kernel element is twisted when I is not periodic.
            return Ok(!x.support.is_empty());
        }
    }
    Ok(z_twist_witness(group, x)?.is_some())
}

/// Decides conjugacy in `G(ℤ, I)` and returns a verified conjugator.
pub fn conjugate_decide_gi(
    group: &Group,
    g: &GElement,
    h: &GElement,
) -> Result<Option<ConjugacyCertificate<GElement>>> {
    group.require_integers("conjugacy in G(H,I)")?;
    group.check(g)?;
    group.check(h)?;
    let Some(wc) = wreath_conjugate_decide_z(&group.tau(g), &group.tau(h))? else {
        return Ok(None);
    };
    let lift = GElement {
        support: wc.conjugator.support,
        center: false,
        translation: wc.conjugator.translation,
    };
    if group.conjugate(&lift, g) == *h {
        return Ok(Some(ConjugacyCertificate {
            conjugator: lift,
            verified: true,
        }));
    }
    // Now lift·g·lift⁻¹ = h·z.
    if !group.in_kernel(h) || !is_conj_z_twist(group, h)? {
        return Ok(None);
    }
    let k = z_twist_witness(group, h)?
        .ok_or_else(|| Error::Inconsistent("twisted element without a witness".into()))?;
    let c = group.multiply(&group.lamp(k), &lift);
    let verified = group.conjugate(&c, g) == *h;
    if !verified {
        return Err(Error::Inconsistent("twist conjugator does not verify".into()));
    }
    Ok(Some(ConjugacyCertificate {
        conjugator: c,
        verified,
    }))
}

fn words_of(g: &WreathElement) -> Result<(Vec<FreeWord>, FreeWord)> {
    let sup = g
        .support
        .iter()
        .map(|x| x.as_word().cloned().ok_or_else(|| Error::mismatch("a free group")))
        .collect::<Result<Vec<_>>>()?;
    let h = g
        .translation
        .as_word()
        .cloned()
        .ok_or_else(|| Error::mismatch("a free group"))?;
    Ok((sup, h))
}

pub(crate) fn length_of_words(sup: &[FreeWord], h: &FreeWord) -> usize {
    let root = FreeWord::identity();
    let hull = TreeHull::of_words(std::iter::once(&root).chain(sup).chain(std::iter::once(h)));
    sup.len() + 2 * hull.edge_count() - h.len()
}

/// Word length of `(u, h) ∈ C₂ ≀ F_r` with respect to `{a} ∪ B^±`: visit every
/// lamp of the hull of `supp(u) ∪ {1, h}` and end at `h`.
pub fn wreath_length_fr(g: &WreathElement) -> Result<usize> {
    let (sup, h) = words_of(g)?;
    Ok(length_of_words(&sup, &h))
}

/// Whether `(u, h) ∈ C₂ ≀ F_r` has minimal length in its conjugacy class.
pub fn is_conjugacy_minimal_fr(g: &WreathElement) -> Result<bool> {
    let (sup, h) = words_of(g)?;
    Ok(minimal_words(&sup, &h))
}

fn starts_with(v: &FreeWord, l: Letter) -> bool {
    v.first() == Some(l)
}

pub(crate) fn minimal_words(sup: &[FreeWord], h: &FreeWord) -> bool {
    if h.is_empty() {
        return sup.is_empty() || TreeHull::of_words(sup).contains(&FreeWord::identity());
    }
    let (w, c) = h.cyclic_decomposition();
    let k = c.len();
    let cl = c.letters();
    // c_i for i in 0..=k+1 with c_0 = c_k and c_{k+1} = c_1.
    let ci = |i: usize| cl[(i + k - 1) % k];
    let in_s = |i: usize, v: &FreeWord| !(starts_with(v, ci(i).inverse()) || starts_with(v, ci(i + 1)));
    let prefixes: Vec<FreeWord> = (0..=k)
        .map(|i| w.mul(&FreeWord::from_letters(cl[..i].iter().copied())))
        .collect();
    let local = |i: usize| -> Vec<FreeWord> {
        let inv = prefixes[i].inverse();
        sup.iter().map(|p| inv.mul(p)).collect()
    };
    for (idx, _) in sup.iter().enumerate() {
        if !(0..=k).any(|i| in_s(i, &local(i)[idx])) {
            return false;
        }
    }
    let t = |i: usize| {
        let mut pts: Vec<FreeWord> = local(i).into_iter().filter(|v| in_s(i, v)).collect();
        pts.push(FreeWord::identity());
        TreeHull::of_words(&pts)
    };
    let (t0, tk) = (t(0), t(k));
    let winv = w.inverse();
    let seg = TreeHull::of_words([&FreeWord::identity(), &winv]);
    if t0
        .vertices()
        .intersection(tk.vertices())
        .any(|v| !seg.contains(v))
    {
        return false;
    }
    let a: BTreeSet<FreeWord> = local(0).into_iter().collect();
    let b: BTreeSet<FreeWord> = local(k).into_iter().collect();
    if a.intersection(&b).any(|v| seg.contains(v)) {
        return false;
    }
    w.is_empty() || t0.contains(&winv) || tk.contains(&winv)
}
