//! Symmetric subsets `I ⊆ H ∖ {1}` and their textual descriptors.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::base::{BaseElement, BaseGroup};
use crate::error::{Error, Result};

/// An opaque membership predicate. Algorithms that need structure refuse it.
#[derive(Clone)]
pub struct Predicate(Arc<dyn Fn(&BaseElement) -> bool + Send + Sync>);

impl Predicate {
    pub fn new<F: Fn(&BaseElement) -> bool + Send + Sync + 'static>(f: F) -> Self {
        Predicate(Arc::new(f))
    }

    pub fn call(&self, x: &BaseElement) -> bool {
        (self.0)(x)
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Predicate(..)")
    }
}

impl PartialEq for Predicate {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

/// A symmetric subset of a base group not containing the identity.
#[derive(Clone, Debug, PartialEq)]
pub enum SymmetricSet {
    Finite(BTreeSet<BaseElement>),
    /// `{ n ∈ ℤ : n mod period ∈ residues }`.
    Periodic { period: u64, residues: BTreeSet<u64> },
    /// The set `explicit` on `[-threshold, threshold]`, and the periodic
    /// rule outside that window.
    EventuallyPeriodic {
        threshold: u64,
        explicit: BTreeSet<i64>,
        period: u64,
        residues: BTreeSet<u64>,
    },
    /// `{ w ∈ F_rank : abelianization(w) ∈ inner }`.
    AbelianizationPullback { rank: usize, inner: Box<SymmetricSet> },
    /// Membership given by a callback; validated by nobody.
    Unchecked(Predicate),
}

fn residue(n: i64, p: u64) -> u64 {
    n.rem_euclid(p as i64) as u64
}

impl SymmetricSet {
    pub fn empty() -> Self {
        SymmetricSet::Finite(BTreeSet::new())
    }

    /// `{±n : n ∈ values}` over the integers.
    pub fn finite_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        SymmetricSet::Finite(
            values
                .into_iter()
                .flat_map(|n| [BaseElement::Int(n), BaseElement::Int(-n)])
                .collect(),
        )
    }

    pub fn periodic<I: IntoIterator<Item = u64>>(period: u64, residues: I) -> Self {
        SymmetricSet::Periodic {
            period,
            residues: residues.into_iter().collect(),
        }
    }

    pub fn eventually_periodic<E, R>(threshold: u64, explicit: E, period: u64, residues: R) -> Self
    where
        E: IntoIterator<Item = i64>,
        R: IntoIterator<Item = u64>,
    {
        SymmetricSet::EventuallyPeriodic {
            threshold,
            explicit: explicit.into_iter().collect(),
            period,
            residues: residues.into_iter().collect(),
        }
    }

    pub fn pullback(rank: usize, inner: SymmetricSet) -> Self {
        SymmetricSet::AbelianizationPullback {
            rank,
            inner: Box::new(inner),
        }
    }

    pub fn unchecked<F: Fn(&BaseElement) -> bool + Send + Sync + 'static>(f: F) -> Self {
        SymmetricSet::Unchecked(Predicate::new(f))
    }

    pub fn is_structured(&self) -> bool {
        match self {
            SymmetricSet::Unchecked(_) => false,
            SymmetricSet::AbelianizationPullback { inner, .. } => inner.is_structured(),
            _ => true,
        }
    }

    fn contains_int(&self, n: i64) -> bool {
        match self {
            SymmetricSet::Finite(s) => s.contains(&BaseElement::Int(n)),
            SymmetricSet::Periodic { period, residues } => residues.contains(&residue(n, *period)),
            SymmetricSet::EventuallyPeriodic {
                threshold,
                explicit,
                period,
                residues,
            } => {
                if n.unsigned_abs() <= *threshold {
                    explicit.contains(&n)
                } else {
                    residues.contains(&residue(n, *period))
                }
            }
            SymmetricSet::AbelianizationPullback { .. } => false,
            SymmetricSet::Unchecked(p) => p.call(&BaseElement::Int(n)),
        }
    }

    pub fn contains(&self, x: &BaseElement) -> bool {
        match (self, x) {
            (SymmetricSet::Finite(s), _) => s.contains(x),
            (SymmetricSet::Unchecked(p), _) => p.call(x),
            (SymmetricSet::AbelianizationPullback { rank, inner }, BaseElement::Word(w)) => {
                let v = w.abelianize(*rank);
                if v.len() == 1 && inner.is_integer_type() {
                    inner.contains_int(v[0])
                } else {
                    inner.contains(&BaseElement::Vector(v))
                }
            }
            (_, BaseElement::Int(n)) => self.contains_int(*n),
            (_, BaseElement::Vector(v)) if v.len() == 1 => self.contains_int(v[0]),
            _ => false,
        }
    }

    fn is_integer_type(&self) -> bool {
        match self {
            SymmetricSet::Periodic { .. } | SymmetricSet::EventuallyPeriodic { .. } => true,
            SymmetricSet::Finite(s) => s.iter().all(|x| matches!(x, BaseElement::Int(_))),
            _ => false,
        }
    }

    /// Checks that the set is symmetric, avoids the identity and lives in `base`.
    pub fn validate(&self, base: &BaseGroup) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSet(m));
        match self {
            SymmetricSet::Finite(s) => {
                for x in s {
                    if !base.contains(x) {
                        return bad(format!("element {x:?} is not in {base}"));
                    }
                    if base.is_identity(x) {
                        return bad("the identity may not belong to the set".into());
                    }
                    if !s.contains(&base.inv(x)) {
                        return bad(format!(
                            "set is not symmetric: missing inverse of {}",
                            base.format_element(x)
                        ));
                    }
                }
                Ok(())
            }
            SymmetricSet::Periodic { period, residues } => {
                if *base != BaseGroup::Integers {
                    return bad(format!("periodic sets need base Z, not {base}"));
                }
                check_residues(*period, residues)?;
                if residues.contains(&0) {
                    return bad("residue 0 would put the identity in the set".into());
                }
                Ok(())
            }
            SymmetricSet::EventuallyPeriodic {
                threshold,
                explicit,
                period,
                residues,
            } => {
                if *base != BaseGroup::Integers {
                    return bad(format!("eventually periodic sets need base Z, not {base}"));
                }
                check_residues(*period, residues)?;
                for &n in explicit {
                    if n == 0 {
                        return bad("0 may not belong to the set".into());
                    }
                    if n.unsigned_abs() > *threshold {
                        return bad(format!("explicit element {n} exceeds the threshold {threshold}"));
                    }
                    if !explicit.contains(&-n) {
                        return bad(format!("explicit part is not symmetric: {n} without {}", -n));
                    }
                }
                Ok(())
            }
            SymmetricSet::AbelianizationPullback { rank, inner } => {
                if *base != BaseGroup::Free(*rank) {
                    return bad(format!("pullback of rank {rank} needs base F_{rank}, not {base}"));
                }
                if *rank == 1 && inner.is_integer_type() {
                    inner.validate(&BaseGroup::Integers)
                } else {
                    inner.validate(&BaseGroup::Lattice(*rank))
                }
            }
            SymmetricSet::Unchecked(_) => Ok(()),
        }
    }

    /// Parses `finite:{..}`, `periodic:p=..,r={..}`,
    /// `eventually:K=..,explicit={..},p=..,r={..}` or `abpull:<inner>`.
    pub fn parse(text: &str, base: &BaseGroup) -> Result<SymmetricSet> {
        let t = text.trim();
        let (kind, body) = t
            .split_once(':')
            .ok_or_else(|| Error::parse(0, "expected <kind>:<body>"))?;
        let set = match kind.trim() {
            "finite" => {
                let items = braced(body.trim(), 0)?;
                let mut s = BTreeSet::new();
                for item in split_top(items) {
                    if !item.trim().is_empty() {
                        s.insert(base.parse_element(item)?);
                    }
                }
                SymmetricSet::Finite(s)
            }
            "periodic" => {
                let kv = key_values(body)?;
                SymmetricSet::Periodic {
                    period: get_u64(&kv, "p")?,
                    residues: get_set(&kv, "r")?.into_iter().map(|n| n as u64).collect(),
                }
            }
            "eventually" => {
                let kv = key_values(body)?;
                SymmetricSet::EventuallyPeriodic {
                    threshold: get_u64(&kv, "K")?,
                    explicit: get_set(&kv, "explicit")?.into_iter().collect(),
                    period: get_u64(&kv, "p")?,
                    residues: get_set(&kv, "r")?.into_iter().map(|n| n as u64).collect(),
                }
            }
            "abpull" => {
                let rank = match base {
                    BaseGroup::Free(r) => *r,
                    _ => return Err(Error::InvalidSet(format!("abpull needs a free base, not {base}"))),
                };
                let inner_base = if rank == 1 {
                    BaseGroup::Integers
                } else {
                    BaseGroup::Lattice(rank)
                };
                SymmetricSet::pullback(rank, SymmetricSet::parse(body, &inner_base)?)
            }
            other => return Err(Error::parse(0, format!("unknown set kind {other:?}"))),
        };
        set.validate(base)?;
        Ok(set)
    }

    /// The textual descriptor, inverse to `parse`.
    pub fn render(&self, base: &BaseGroup) -> String {
        let ints = |s: &mut dyn Iterator<Item = String>| s.collect::<Vec<_>>().join(",");
        match self {
            SymmetricSet::Finite(s) => {
                format!("finite:{{{}}}", ints(&mut s.iter().map(|x| base.format_element(x))))
            }
            SymmetricSet::Periodic { period, residues } => format!(
                "periodic:p={period},r={{{}}}",
                ints(&mut residues.iter().map(|r| r.to_string()))
            ),
            SymmetricSet::EventuallyPeriodic {
                threshold,
                explicit,
                period,
                residues,
            } => format!(
                "eventually:K={threshold},explicit={{{}}},p={period},r={{{}}}",
                ints(&mut explicit.iter().map(|r| r.to_string())),
                ints(&mut residues.iter().map(|r| r.to_string()))
            ),
            SymmetricSet::AbelianizationPullback { rank, inner } => {
                let inner_base = if *rank == 1 {
                    BaseGroup::Integers
                } else {
                    BaseGroup::Lattice(*rank)
                };
                format!("abpull:{}", inner.render(&inner_base))
            }
            SymmetricSet::Unchecked(_) => "unchecked".to_string(),
        }
    }

    /// The canonical form of a structured subset of `ℤ`.
    pub fn integer_form(&self) -> Result<IntegerSetForm> {
        let (period, residues, threshold, explicit) = match self {
            SymmetricSet::Finite(s) => {
                let mut w = BTreeSet::new();
                for x in s {
                    match x {
                        BaseElement::Int(n) => {
                            w.insert(*n);
                        }
                        _ => return Err(Error::mismatch("Z")),
                    }
                }
                let k = w.iter().map(|n| n.unsigned_abs()).max().unwrap_or(0);
                (1, BTreeSet::new(), k, w)
            }
            SymmetricSet::Periodic { period, residues } => (*period, residues.clone(), 0, BTreeSet::new()),
            SymmetricSet::EventuallyPeriodic {
                threshold,
                explicit,
                period,
                residues,
            } => (*period, residues.clone(), *threshold, explicit.clone()),
            SymmetricSet::AbelianizationPullback { .. } => return Err(Error::mismatch("Z")),
            SymmetricSet::Unchecked(_) => {
                return Err(Error::NoStrategy("set is given by an unchecked predicate".into()))
            }
        };
        let (period, residues) = minimal_period(period, &residues);
        let tail = |n: i64| residues.contains(&residue(n, period));
        let original = |n: i64| {
            if n.unsigned_abs() <= threshold {
                explicit.contains(&n)
            } else {
                tail(n)
            }
        };
        let mut k = threshold;
        while k > 0 && original(k as i64) == tail(k as i64) {
            k -= 1;
        }
        let window = (-(k as i64)..=k as i64).filter(|&n| original(n)).collect();
        Ok(IntegerSetForm {
            period,
            residues,
            threshold: k,
            window,
        })
    }
}

fn check_residues(period: u64, residues: &BTreeSet<u64>) -> Result<()> {
    if period == 0 {
        return Err(Error::InvalidSet("period must be positive".into()));
    }
    for &r in residues {
        if r >= period {
            return Err(Error::InvalidSet(format!("residue {r} is not below the period {period}")));
        }
        if !residues.contains(&((period - r) % period)) {
            return Err(Error::InvalidSet(format!("residues are not symmetric: {r} without {}", (period - r) % period)));
        }
    }
    Ok(())
}

fn minimal_period(period: u64, residues: &BTreeSet<u64>) -> (u64, BTreeSet<u64>) {
    let mut divisors: Vec<u64> = Vec::new();
    let mut d = 1;
    while d * d <= period {
        if period % d == 0 {
            divisors.push(d);
            divisors.push(period / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    for d in divisors {
        if residues.iter().all(|r| residues.contains(&((r + d) % period))) {
            return (d, residues.iter().map(|r| r % d).collect());
        }
    }
    unreachable!("the period itself is always a period")
}

/// Canonical description of an eventually periodic symmetric subset of `ℤ`:
/// minimal tail period, tail residues, minimal threshold and the set inside
/// the window `[-threshold, threshold]`. Two sets are equal exactly when
/// their forms are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerSetForm {
    pub period: u64,
    pub residues: BTreeSet<u64>,
    pub threshold: u64,
    pub window: BTreeSet<i64>,
}

impl IntegerSetForm {
    pub fn contains(&self, n: i64) -> bool {
        if n.unsigned_abs() <= self.threshold {
            self.window.contains(&n)
        } else {
            self.residues.contains(&residue(n, self.period))
        }
    }

    /// Invariant under translation by the period.
    pub fn is_periodic(&self) -> bool {
        self.threshold == 0 && !self.residues.contains(&0)
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    /// Whether some element of the set is congruent to `r` modulo `m`.
    pub fn meets_class(&self, r: i64, m: u64) -> bool {
        if m == 0 {
            return self.contains(r);
        }
        if self.window.iter().any(|&n| residue(n - r, m) == 0) {
            return true;
        }
        let g = gcd(m, self.period);
        self.residues.iter().any(|&q| (q as i64 - r).rem_euclid(g as i64) == 0)
    }

    pub fn to_set(&self) -> SymmetricSet {
        if self.is_periodic() {
            SymmetricSet::Periodic {
                period: self.period,
                residues: self.residues.clone(),
            }
        } else if self.is_finite() {
            SymmetricSet::Finite(self.window.iter().map(|&n| BaseElement::Int(n)).collect())
        } else {
            SymmetricSet::EventuallyPeriodic {
                threshold: self.threshold,
                explicit: self.window.clone(),
                period: self.period,
                residues: self.residues.clone(),
            }
        }
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn braced(s: &str, offset: usize) -> Result<&str> {
    s.strip_prefix('{')
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| Error::parse(offset, format!("expected {{...}}, found {s:?}")))
}

/// Splits on commas that are not nested inside braces or parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn key_values(body: &str) -> Result<Vec<(String, String)>> {
    split_top(body)
        .into_iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::parse(0, format!("expected key=value, found {kv:?}")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn lookup<'a>(kv: &'a [(String, String)], key: &str) -> Result<&'a str> {
    kv.iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| Error::parse(0, format!("missing key {key:?}")))
}

fn get_u64(kv: &[(String, String)], key: &str) -> Result<u64> {
    let v = lookup(kv, key)?;
    v.parse().map_err(|_| Error::parse(0, format!("{key}: expected a number, found {v:?}")))
}

fn get_set(kv: &[(String, String)], key: &str) -> Result<Vec<i64>> {
    let v = lookup(kv, key)?;
    split_top(braced(v, 0)?)
        .into_iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("{key}: bad integer {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_roundtrip() {
        let z = BaseGroup::Integers;
        for text in [
            "finite:{-2,-1,1,2}",
            "periodic:p=4,r={1,3}",
            "eventually:K=5,explicit={-2,2},p=3,r={1,2}",
        ] {
            let s = SymmetricSet::parse(text, &z).unwrap();
            assert_eq!(s.render(&z), text);
        }
        let f = BaseGroup::Free(2);
        let s = SymmetricSet::parse("finite:{st,TS}", &f).unwrap();
        assert_eq!(SymmetricSet::parse(&s.render(&f), &f).unwrap(), s);
        let p = SymmetricSet::parse("abpull:finite:{(1,0),(-1,0)}", &f).unwrap();
        assert!(p.contains(&f.parse_element("tsT").unwrap()));
        assert!(!p.contains(&f.parse_element("t").unwrap()));
    }

    #[test]
    fn rejects_asymmetric_and_identity() {
        let z = BaseGroup::Integers;
        assert!(SymmetricSet::parse("finite:{1}", &z).is_err());
        assert!(SymmetricSet::parse("finite:{0}", &z).is_err());
        assert!(SymmetricSet::parse("periodic:p=4,r={1}", &z).is_err());
        assert!(SymmetricSet::parse("periodic:p=4,r={0}", &z).is_err());
        assert!(SymmetricSet::parse("eventually:K=1,explicit={3,-3},p=2,r={}", &z).is_err());
        assert!(SymmetricSet::parse("periodic:p=2,r={1}", &BaseGroup::Free(2)).is_err());
    }

    #[test]
    fn canonical_forms() {
        let z = BaseGroup::Integers;
        let f = SymmetricSet::parse("periodic:p=4,r={1,3}", &z).unwrap().integer_form().unwrap();
        assert_eq!((f.period, f.threshold), (2, 0));
        assert!(f.is_periodic());
        let e = SymmetricSet::parse("eventually:K=5,explicit={-5,-4,-2,-1,1,2,4,5},p=3,r={1,2}", &z)
            .unwrap()
            .integer_form()
            .unwrap();
        assert_eq!(e.to_set(), SymmetricSet::periodic(3, [1, 2]));
        let g = SymmetricSet::finite_integers([5]).integer_form().unwrap();
        assert_eq!((g.period, g.threshold, g.is_periodic()), (1, 5, false));
        let mult = SymmetricSet::eventually_periodic(0, [], 3, [0]).integer_form().unwrap();
        assert!(!mult.is_periodic());
    }
}
