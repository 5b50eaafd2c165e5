//! Subgroup and submonoid membership in `G(ℤ, I)`, uniform subgroup
//! membership in `C₂ ≀ ℤ` by module reduction over `F₂[s^±1]`, and the
//! identification `⟨a, tⁿ, z⟩ ≅ G_J`.

mod laurent;

pub use laurent::LaurentPoly;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::base::{BaseElement, BaseGroup};
use crate::error::{Error, Result};
use crate::ext::{gcd, GElement, Group, SymmetricSet, Wreath, WreathElement};

/// A product of powers of numbered generators, `g_i^e` in order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SubgroupWord {
    factors: Vec<(usize, i64)>,
}

impl SubgroupWord {
    pub fn empty() -> Self {
        SubgroupWord::default()
    }

    pub fn generator(i: usize) -> Self {
        let mut w = SubgroupWord::empty();
        w.push(i, 1);
        w
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }

    /// Total number of generator letters.
    pub fn len(&self) -> usize {
        self.factors.iter().map(|f| f.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, i: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.0 == i {
                last.1 += e;
                if last.1 == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push((i, e));
    }

    pub fn append(&mut self, other: &SubgroupWord) {
        for &(i, e) in &other.factors {
            self.push(i, e);
        }
    }

    pub fn inverse(&self) -> SubgroupWord {
        SubgroupWord {
            factors: self.factors.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn power(&self, n: i64) -> SubgroupWord {
        let unit = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = SubgroupWord::empty();
        for _ in 0..n.unsigned_abs() {
            out.append(&unit);
        }
        out
    }

    pub fn evaluate(&self, group: &Group, gens: &[GElement]) -> Result<GElement> {
        let mut acc = group.identity();
        for &(i, e) in &self.factors {
            let g = gens.get(i).ok_or_else(|| Error::InvalidSet(format!("no generator {}", i + 1)))?;
            acc = group.multiply(&acc, &group.power(g, e));
        }
        Ok(acc)
    }

    pub fn evaluate_wreath(&self, wreath: &Wreath, gens: &[WreathElement]) -> Result<WreathElement> {
        let mut acc = wreath.identity();
        for &(i, e) in &self.factors {
            let g = gens.get(i).ok_or_else(|| Error::InvalidSet(format!("no generator {}", i + 1)))?;
            acc = wreath.multiply(&acc, &wreath.power(g, e));
        }
        Ok(acc)
    }

    /// Parses whitespace-separated 1-based indices, negative for inverses,
    /// e.g. `"1 2 -1 -2"`.
    pub fn parse(text: &str) -> Result<SubgroupWord> {
        let mut w = SubgroupWord::empty();
        let mut offset = 0;
        for tok in text.split_whitespace() {
            let start = text[offset..].find(tok).map_or(offset, |p| offset + p);
            offset = start + tok.len();
            let n: i64 = tok.parse().map_err(|_| Error::parse(start, format!("bad generator index {tok:?}")))?;
            if n == 0 {
                return Err(Error::parse(start, "generator indices start at 1"));
            }
            w.push(n.unsigned_abs() as usize - 1, n.signum());
        }
        Ok(w)
    }
}

impl fmt::Display for SubgroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(i, e)| if e == 1 { format!("g{}", i + 1) } else { format!("g{}^{e}", i + 1) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// An element of translation `d = gcd` of the given translations, written
/// in the generators, or `None` if all translations vanish.
fn translation_generator(translations: &[i64]) -> Option<(SubgroupWord, i64)> {
    let mut cur: Option<(SubgroupWord, i64)> = None;
    for (i, &k) in translations.iter().enumerate() {
        if k == 0 {
            continue;
        }
        cur = Some(match cur {
            None => (SubgroupWord::generator(i), k),
            Some((w, c)) => {
                let (g, x, y) = ext_gcd(c, k);
                let mut next = w.power(x);
                next.append(&SubgroupWord::generator(i).power(y));
                (next, g)
            }
        });
    }
    cur.map(|(w, c)| if c < 0 { (w.inverse(), -c) } else { (w, c) })
}

fn int_of(x: &BaseElement) -> Result<i64> {
    x.as_int().ok_or_else(|| Error::mismatch("Z"))
}

fn positions(g: &WreathElement) -> Result<Vec<i64>> {
    g.support.iter().map(int_of).collect()
}

#[derive(Clone, Debug)]
struct ModuleRow {
    entries: Vec<LaurentPoly>,
    combo: Vec<LaurentPoly>,
}

impl ModuleRow {
    fn sub_multiple(&mut self, q: &LaurentPoly, other: &ModuleRow) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = a.add(&q.mul(b));
        }
        for (a, b) in self.combo.iter_mut().zip(&other.combo) {
            *a = a.add(&q.mul(b));
        }
    }

    fn scale(&mut self, u: i64) {
        for a in self.entries.iter_mut().chain(self.combo.iter_mut()) {
            *a = a.shift(u);
        }
    }
}

#[derive(Clone, Debug)]
struct VectorRow {
    support: BTreeSet<i64>,
    combo: BTreeSet<usize>,
}

fn xor_into<T: Ord + Clone>(a: &mut BTreeSet<T>, b: &BTreeSet<T>) {
    for x in b {
        if !a.remove(x) {
            a.insert(x.clone());
        }
    }
}

/// A finitely generated subgroup of `C₂ ≀ ℤ` prepared for membership
/// queries. With `d > 0` the lamp part is a module over `F₂[s^±1]`,
/// `s = t^d`, inside `F₂[t^±1] ≅ F₂[s^±1]^d`, stored in echelon form.
#[derive(Clone, Debug)]
pub struct WreathSubgroupData {
    generators: Vec<WreathElement>,
    d: u64,
    shift: Option<SubgroupWord>,
    /// `b_i = g_i · g0^(-k_i/d)`, the lamp parts spanning the module.
    module_generators: Vec<SubgroupWord>,
    pivots: Vec<(usize, ModuleRow)>,
    vector_basis: Vec<(i64, VectorRow)>,
}

impl WreathSubgroupData {
    pub fn new(generators: &[WreathElement]) -> Result<WreathSubgroupData> {
        let wreath = Wreath::new(BaseGroup::Integers);
        let translations: Vec<i64> = generators.iter().map(|g| int_of(&g.translation)).collect::<Result<_>>()?;
        let shift = translation_generator(&translations);
        let d = shift.as_ref().map_or(0, |s| s.1 as u64);
        let mut data = WreathSubgroupData {
            generators: generators.to_vec(),
            d,
            shift: shift.as_ref().map(|s| s.0.clone()),
            module_generators: Vec::new(),
            pivots: Vec::new(),
            vector_basis: Vec::new(),
        };
        if d == 0 {
            for (i, g) in generators.iter().enumerate() {
                let row = VectorRow {
                    support: positions(g)?.into_iter().collect(),
                    combo: BTreeSet::from([i]),
                };
                data.insert_vector(row);
            }
            return Ok(data);
        }
        let g0 = shift.expect("d > 0").0;
        let mut rows = Vec::new();
        for (i, &k) in translations.iter().enumerate() {
            let mut b = SubgroupWord::generator(i);
            b.append(&g0.power(-k / d as i64));
            let value = b.evaluate_wreath(&wreath, generators)?;
            debug_assert_eq!(int_of(&value.translation)?, 0);
            let mut combo = vec![LaurentPoly::zero(); generators.len()];
            combo[i] = LaurentPoly::one();
            rows.push(ModuleRow {
                entries: data.to_module(&value)?,
                combo,
            });
            data.module_generators.push(b);
        }
        data.pivots = echelon(rows, d as usize);
        Ok(data)
    }

    pub fn generators(&self) -> &[WreathElement] {
        &self.generators
    }

    /// The index of the projection image `dℤ`, `0` when it is trivial.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Echelon basis of the lamp module, one vector of `d` entries per row.
    pub fn basis(&self) -> Vec<Vec<LaurentPoly>> {
        self.pivots.iter().map(|(_, r)| r.entries.clone()).collect()
    }

    fn to_module(&self, g: &WreathElement) -> Result<Vec<LaurentPoly>> {
        let d = self.d as i64;
        let mut v = vec![LaurentPoly::zero(); d as usize];
        for p in positions(g)? {
            let r = p.rem_euclid(d);
            v[r as usize] = v[r as usize].add(&LaurentPoly::monomial((p - r) / d));
        }
        Ok(v)
    }

    fn insert_vector(&mut self, mut row: VectorRow) {
        for (p, b) in &self.vector_basis {
            if row.support.contains(p) {
                xor_into(&mut row.support, &b.support);
                xor_into(&mut row.combo, &b.combo);
            }
        }
        if let Some(&p) = row.support.iter().next_back() {
            for (_, b) in self.vector_basis.iter_mut() {
                if b.support.contains(&p) {
                    xor_into(&mut b.support, &row.support);
                    xor_into(&mut b.combo, &row.combo);
                }
            }
            self.vector_basis.push((p, row));
        }
    }

    fn module_word(&self, combo: &[LaurentPoly]) -> SubgroupWord {
        let g0 = self.shift.as_ref().expect("d > 0");
        let mut terms: Vec<(i64, usize)> = Vec::new();
        for (i, c) in combo.iter().enumerate() {
            terms.extend(c.exponents().into_iter().map(|e| (e, i)));
        }
        terms.sort_unstable();
        let mut w = SubgroupWord::empty();
        let mut at = 0;
        for (e, i) in terms {
            w.append(&g0.power(e - at));
            w.append(&self.module_generators[i]);
            at = e;
        }
        w.append(&g0.power(-at));
        w
    }
}

fn echelon(mut rows: Vec<ModuleRow>, d: usize) -> Vec<(usize, ModuleRow)> {
    let mut pivots = Vec::new();
    for col in 0..d {
        loop {
            let live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].entries[col].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            let p = *live.iter().min_by_key(|&&i| rows[i].entries[col].span()).expect("nonempty");
            let pivot = rows[p].clone();
            for &i in &live {
                if i != p {
                    let (q, _) = rows[i].entries[col].div_rem(&pivot.entries[col]);
                    rows[i].sub_multiple(&q, &pivot);
                }
            }
        }
        if let Some(i) = rows.iter().position(|r| !r.entries[col].is_zero()) {
            let mut row = rows.swap_remove(i);
            let low = row.entries[col].low().expect("nonzero");
            row.scale(-low);
            pivots.push((col, row));
        }
        rows.retain(|r| r.entries.iter().any(|e| !e.is_zero()));
    }
    pivots
}

/// Decides `target ∈ ⟨generators⟩` in `C₂ ≀ ℤ`; on success returns a word in
/// the generators, verified to evaluate to `target`.
pub fn wreath_membership(target: &WreathElement, sub: &WreathSubgroupData) -> Result<Option<SubgroupWord>> {
    let wreath = Wreath::new(BaseGroup::Integers);
    let k = int_of(&target.translation)?;
    let word = if sub.d == 0 {
        if k != 0 {
            return Ok(None);
        }
        let mut row = VectorRow {
            support: positions(target)?.into_iter().collect(),
            combo: BTreeSet::new(),
        };
        for (p, b) in &sub.vector_basis {
            if row.support.contains(p) {
                xor_into(&mut row.support, &b.support);
                xor_into(&mut row.combo, &b.combo);
            }
        }
        if !row.support.is_empty() {
            return Ok(None);
        }
        let mut w = SubgroupWord::empty();
        for i in row.combo {
            w.push(i, 1);
        }
        w
    } else {
        let d = sub.d as i64;
        if k.rem_euclid(d) != 0 {
            return Ok(None);
        }
        let g0 = sub.shift.as_ref().expect("d > 0");
        let back = g0.power(-k / d).evaluate_wreath(&wreath, &sub.generators)?;
        let lamps = wreath.multiply(target, &back);
        let mut v = sub.to_module(&lamps)?;
        let mut combo = vec![LaurentPoly::zero(); sub.generators.len()];
        for (col, row) in &sub.pivots {
            if v[*col].is_zero() {
                continue;
            }
            let (q, r) = v[*col].div_rem(&row.entries[*col]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (a, b) in v.iter_mut().zip(&row.entries) {
                *a = a.add(&q.mul(b));
            }
            for (a, b) in combo.iter_mut().zip(&row.combo) {
                *a = a.add(&q.mul(b));
            }
        }
        if v.iter().any(|e| !e.is_zero()) {
            return Ok(None);
        }
        let mut w = sub.module_word(&combo);
        w.append(&g0.power(k / d));
        w
    };
    if word.evaluate_wreath(&wreath, &sub.generators)? != *target {
        return Err(Error::Inconsistent("membership expression does not evaluate to the target".into()));
    }
    Ok(Some(word))
}

/// Why `z` is not in a subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ZProof {
    /// Supplied by the caller.
    Asserted,
    /// `⟨a, tⁿ⟩` with no multiple of `n` in `I`.
    LampAndTranslation { n: u64 },
    /// All lamp positions of the subgroup lie in a set `Q` with
    /// `(Q − Q) ∩ I = ∅`, and a character of the resulting split extension
    /// kills every generator but not `z`.
    Character,
    /// The subgroup is finite and was enumerated completely.
    FiniteClosure { order: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ZStatus {
    ContainsZ(SubgroupWord),
    NotContainsZ(ZProof),
    Unknown,
}

/// Generators of a subgroup of `G(ℤ, I)` together with the status of `z`.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    generators: Vec<GElement>,
    z_status: ZStatus,
}

impl SubgroupHandle {
    /// Checks a `ContainsZ` witness before accepting it.
    pub fn new(group: &Group, generators: Vec<GElement>, z_status: ZStatus) -> Result<SubgroupHandle> {
        group.require_integers("subgroup membership")?;
        for g in &generators {
            group.check(g)?;
        }
        if let ZStatus::ContainsZ(w) = &z_status {
            if w.evaluate(group, &generators)? != group.z() {
                return Err(Error::Inconsistent(format!("witness {w} does not evaluate to z")));
            }
        }
        Ok(SubgroupHandle { generators, z_status })
    }

    /// Resolves the status of `z` with [`resolve_z_status`].
    pub fn resolve(group: &Group, generators: Vec<GElement>, search_bound: usize) -> Result<SubgroupHandle> {
        let status = resolve_z_status(group, &generators, search_bound)?;
        SubgroupHandle::new(group, generators, status)
    }

    pub fn generators(&self) -> &[GElement] {
        &self.generators
    }

    pub fn z_status(&self) -> &ZStatus {
        &self.z_status
    }
}

pub const DEFAULT_Z_SEARCH_BOUND: usize = 8;
const SEARCH_CAP: usize = 200_000;

fn is_lamp_a(g: &GElement) -> bool {
    !g.center && g.translation == BaseElement::Int(0) && g.support.len() == 1 && g.support.contains(&BaseElement::Int(0))
}

fn is_pure_translation(g: &GElement) -> bool {
    !g.center && g.support.is_empty()
}

fn special_family(group: &Group, gens: &[GElement]) -> Result<Option<ZStatus>> {
    if !gens.iter().all(|g| is_lamp_a(g) || is_pure_translation(g)) {
        return Ok(None);
    }
    let has_lamp = gens.iter().any(is_lamp_a);
    let translations: Vec<i64> = gens.iter().map(|g| int_of(&g.translation)).collect::<Result<_>>()?;
    let Some((tn, n)) = translation_generator(&translations) else {
        return Ok(Some(ZStatus::NotContainsZ(ZProof::LampAndTranslation { n: 0 })));
    };
    if !has_lamp {
        return Ok(Some(ZStatus::NotContainsZ(ZProof::LampAndTranslation { n: n as u64 })));
    }
    let Ok(form) = group.set().integer_form() else {
        return Ok(None);
    };
    let bound = form.threshold as i64 / n + form.period as i64 + 1;
    let Some(j) = (1..=bound).find(|&j| form.contains(n * j)) else {
        return Ok(Some(ZStatus::NotContainsZ(ZProof::LampAndTranslation { n: n as u64 })));
    };
    let a = gens.iter().position(is_lamp_a).expect("has a lamp");
    let shifted = {
        let mut w = tn.power(j);
        w.push(a, 1);
        w.append(&tn.power(-j));
        w
    };
    let mut witness = SubgroupWord::generator(a);
    witness.append(&shifted);
    witness.push(a, 1);
    witness.append(&shifted);
    Ok(Some(ZStatus::ContainsZ(witness)))
}

/// Solves `A·x = b` over the two-element field.
fn solve_f2(mut rows: Vec<(Vec<bool>, bool)>, vars: usize) -> bool {
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c]) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0[c] {
                for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                    *x ^= *y;
                }
                row.1 ^= pivot.1;
            }
        }
        r += 1;
    }
    rows[r..].iter().all(|row| !row.1)
}

fn character_certificate(group: &Group, gens: &[GElement]) -> Result<bool> {
    let translations: Vec<i64> = gens.iter().map(|g| int_of(&g.translation)).collect::<Result<_>>()?;
    let d = translations.iter().fold(0u64, |acc, k| gcd(acc, k.unsigned_abs()));
    let lamp_sets: Vec<Vec<i64>> = gens.iter().map(|g| g.support.iter().map(int_of).collect()).collect::<Result<_>>()?;
    let points: BTreeSet<i64> = lamp_sets.iter().flatten().copied().collect();
    let form = match d {
        0 => None,
        _ => match group.set().integer_form() {
            Ok(f) => Some(f),
            Err(_) => return Ok(false),
        },
    };
    for &p in &points {
        for &q in &points {
            let hit = match &form {
                Some(f) => f.meets_class(q - p, d),
                None => group.chi(&BaseElement::Int(q - p)),
            };
            if hit {
                return Ok(false);
            }
        }
    }
    let classes: Vec<i64> = if d > 0 {
        points.iter().map(|p| p.rem_euclid(d as i64)).collect::<BTreeSet<_>>().into_iter().collect()
    } else {
        points.iter().copied().collect()
    };
    let vars = classes.len() + 1;
    let rows = gens
        .iter()
        .zip(&lamp_sets)
        .zip(&translations)
        .map(|((g, lamps), &k)| {
            let mut row = vec![false; vars];
            for &p in lamps {
                let key = if d > 0 { p.rem_euclid(d as i64) } else { p };
                let c = classes.binary_search(&key).expect("class present");
                row[c] ^= true;
            }
            if d > 0 {
                row[vars - 1] = (k / d as i64) % 2 != 0;
            }
            (row, g.center)
        })
        .collect();
    Ok(solve_f2(rows, vars))
}

fn bounded_search(group: &Group, gens: &[GElement], bound: usize) -> Result<ZStatus> {
    let z = group.z();
    let mut letters: Vec<(usize, i64, GElement)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        letters.push((i, 1, g.clone()));
        letters.push((i, -1, group.inverse(g)));
    }
    let mut seen: HashMap<GElement, Option<(GElement, usize, i64)>> = HashMap::new();
    seen.insert(group.identity(), None);
    let mut frontier = VecDeque::from([group.identity()]);
    let mut found = None;
    'outer: for _ in 0..bound {
        let mut next = VecDeque::new();
        for x in frontier {
            for (i, e, g) in &letters {
                let y = group.multiply(&x, g);
                if seen.contains_key(&y) {
                    continue;
                }
                seen.insert(y.clone(), Some((x.clone(), *i, *e)));
                if y == z {
                    found = Some(y);
                    break 'outer;
                }
                next.push_back(y);
                if seen.len() > SEARCH_CAP {
                    return Ok(ZStatus::Unknown);
                }
            }
        }
        if next.is_empty() {
            return Ok(ZStatus::NotContainsZ(ZProof::FiniteClosure { order: seen.len() }));
        }
        frontier = next;
    }
    let Some(mut cur) = found else {
        return Ok(ZStatus::Unknown);
    };
    let mut rev = Vec::new();
    while let Some(Some((prev, i, e))) = seen.get(&cur) {
        rev.push((*i, *e));
        cur = prev.clone();
    }
    let mut w = SubgroupWord::empty();
    for (i, e) in rev.into_iter().rev() {
        w.push(i, e);
    }
    Ok(ZStatus::ContainsZ(w))
}

/// Tri-state decision of `z ∈ ⟨generators⟩`. `ContainsZ` always carries a
/// verified witness; `NotContainsZ` only comes with a proof; anything else
/// is `Unknown`. `search_bound` limits the word length of the search.
pub fn resolve_z_status(group: &Group, gens: &[GElement], search_bound: usize) -> Result<ZStatus> {
    group.require_integers("subgroup membership")?;
    let z = group.z();
    if let Some(i) = gens.iter().position(|g| *g == z) {
        return Ok(ZStatus::ContainsZ(SubgroupWord::generator(i)));
    }
    if let Some(s) = special_family(group, gens)? {
        return Ok(s);
    }
    if gens.iter().all(|g| !g.center) && character_certificate(group, gens)? {
        return Ok(ZStatus::NotContainsZ(ZProof::Character));
    }
    bounded_search(group, gens, search_bound)
}

/// A membership verdict with a word in the subgroup generators when the
/// element belongs to the subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembershipVerdict {
    pub member: bool,
    pub expression: Option<SubgroupWord>,
}

/// Decides `w ∈ H` for `H ≤ G(ℤ, I)`: first `τ(w) ∈ τ(H)` in the
/// lamplighter group, then, when `z ∉ H`, whether the lifted expression
/// hits `w` exactly.
pub fn subgroup_membership_gi(group: &Group, w: &GElement, sub: &SubgroupHandle) -> Result<MembershipVerdict> {
    group.require_integers("subgroup membership")?;
    group.check(w)?;
    if sub.z_status == ZStatus::Unknown {
        return Err(Error::UnknownZStatus);
    }
    let images: Vec<WreathElement> = sub.generators.iter().map(|g| group.tau(g)).collect();
    let data = WreathSubgroupData::new(&images)?;
    let Some(expr) = wreath_membership(&group.tau(w), &data)? else {
        return Ok(MembershipVerdict {
            member: false,
            expression: None,
        });
    };
    let h = expr.evaluate(group, &sub.generators)?;
    if h == *w {
        return Ok(MembershipVerdict {
            member: true,
            expression: Some(expr),
        });
    }
    match &sub.z_status {
        ZStatus::ContainsZ(zw) => {
            let mut full = expr;
            full.append(zw);
            if full.evaluate(group, &sub.generators)? != *w {
                return Err(Error::Inconsistent("lifted expression misses the target".into()));
            }
            Ok(MembershipVerdict {
                member: true,
                expression: Some(full),
            })
        }
        _ => Ok(MembershipVerdict {
            member: false,
            expression: None,
        }),
    }
}

pub const SUBMONOID_CLOSURE_CAP: usize = 1 << 16;

fn finite_closure(group: &Group, gens: &[GElement]) -> Result<HashSet<GElement>> {
    let mut seen = HashSet::from([group.identity()]);
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = group.multiply(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > SUBMONOID_CLOSURE_CAP {
                    return Err(Error::LimitExceeded {
                        what: "finite subgroup closure",
                        value: seen.len(),
                        limit: SUBMONOID_CLOSURE_CAP,
                    });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Decides `w ∈ ⟨generators⟩⁺`, the submonoid. With translations of both
/// signs the submonoid is the subgroup; otherwise products are enumerated
/// level by level, between factors from the finite subgroup generated by the
/// translation-free generators.
pub fn submonoid_membership(group: &Group, w: &GElement, gens: &[GElement], search_bound: usize) -> Result<bool> {
    group.require_integers("submonoid membership")?;
    group.check(w)?;
    let signs: Vec<i64> = gens.iter().map(|g| int_of(&g.translation).map(i64::signum)).collect::<Result<_>>()?;
    if signs.contains(&1) && signs.contains(&-1) {
        let sub = SubgroupHandle::resolve(group, gens.to_vec(), search_bound)?;
        return Ok(subgroup_membership_gi(group, w, &sub)?.member);
    }
    if signs.contains(&-1) {
        let inverses: Vec<GElement> = gens.iter().map(|g| group.inverse(g)).collect();
        return submonoid_membership(group, &group.inverse(w), &inverses, search_bound);
    }
    let k = int_of(&w.translation)?;
    if k < 0 {
        return Ok(false);
    }
    let flat: Vec<GElement> = gens.iter().filter(|g| g.translation == BaseElement::Int(0)).cloned().collect();
    let h0 = finite_closure(group, &flat)?;
    let steps: Vec<(i64, &GElement)> = gens
        .iter()
        .filter_map(|g| g.translation.as_int().filter(|&p| p > 0).map(|p| (p, g)))
        .collect();
    let mut levels: Vec<HashSet<GElement>> = vec![h0.clone()];
    for c in 1..=k {
        let mut level = HashSet::new();
        for &(p, g) in &steps {
            if p > c {
                continue;
            }
            for x in &levels[(c - p) as usize] {
                let xg = group.multiply(x, g);
                for h in &h0 {
                    level.insert(group.multiply(&xg, h));
                    if level.len() > SUBMONOID_CLOSURE_CAP {
                        return Err(Error::LimitExceeded {
                            what: "submonoid level",
                            value: level.len(),
                            limit: SUBMONOID_CLOSURE_CAP,
                        });
                    }
                }
            }
        }
        levels.push(level);
    }
    Ok(levels[k as usize].contains(w))
}

/// The set `J = {j : nj ∈ I}`, so that `⟨a, tⁿ, z⟩ ≅ G_J`.
pub fn subgroup_as_gj(n: u64, set: &SymmetricSet) -> Result<SymmetricSet> {
    if n == 0 {
        return Err(Error::InvalidSet("n must be positive".into()));
    }
    let form = set.integer_form()?;
    let p = form.period;
    let period = p / gcd(p, n);
    let residues: BTreeSet<u64> = (0..period).filter(|&r| form.residues.contains(&((n * r) % p))).collect();
    let threshold = form.threshold / n;
    let explicit: BTreeSet<i64> = (-(threshold as i64)..=threshold as i64)
        .filter(|&j| form.contains(n as i64 * j))
        .collect();
    Ok(SymmetricSet::eventually_periodic(threshold, explicit, period, residues)
        .integer_form()?
        .to_set())
}
