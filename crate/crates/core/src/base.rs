//! Base groups `H`: the integers, free abelian lattices, free groups and
//! finite cyclic groups, each with a fixed total order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

const FREE_LETTERS: &[u8] = b"stuvwxy";

/// A signed basis letter. `Letter::new(i, false)` is the i-th generator,
/// `Letter::new(i, true)` its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter(i8);

impl Letter {
    pub const fn new(index: usize, inverse: bool) -> Letter {
        assert!(index < 64, "letter index out of range");
        let v = index as i8 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn index(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// +1 for a basis letter, -1 for an inverse.
    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }

    fn key(self) -> u8 {
        2 * self.index() as u8 + u8::from(self.is_inverse())
    }

    /// All signed letters of a rank-`rank` basis in the fixed order
    /// `s < S < t < T < ...`.
    pub fn all(rank: usize) -> Vec<Letter> {
        (0..rank)
            .flat_map(|i| [Letter::new(i, false), Letter::new(i, true)])
            .collect()
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A freely reduced word in a free group. Ordered by ShortLex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> FreeWord {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `letter^n`, using the inverse letter for negative `n`.
    pub fn power(letter: Letter, n: i64) -> FreeWord {
        let l = if n < 0 { letter.inverse() } else { letter };
        FreeWord(vec![l; n.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Appends a letter, cancelling against the last one if needed.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn prefix(&self, n: usize) -> FreeWord {
        FreeWord(self.0[..n].to_vec())
    }

    pub fn common_prefix_len(&self, other: &FreeWord) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// Length of `self⁻¹ · other`, the tree distance between the vertices.
    pub fn distance(&self, other: &FreeWord) -> usize {
        self.len() + other.len() - 2 * self.common_prefix_len(other)
    }

    /// Writes the word as `w · c · w⁻¹` with `c` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (FreeWord, FreeWord) {
        let n = self.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k] == self.0[n - 1 - k].inverse() {
            k += 1;
        }
        (
            FreeWord(self.0[..k].to_vec()),
            FreeWord(self.0[k..n - k].to_vec()),
        )
    }

    /// Exponent sums of each basis letter.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.0 {
            if l.index() < rank {
                v[l.index()] += l.sign();
            }
        }
        v
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// An element of some base group. The variant must match the group it is
/// used with; `BaseGroup::check` validates this.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BaseElement {
    /// An integer, or a residue in `0..n` for the cyclic group of order `n`.
    Int(i64),
    /// A vector in `ℤ^d`.
    Vector(Vec<i64>),
    /// A reduced word in a free group.
    Word(FreeWord),
}

impl BaseElement {
    fn variant_rank(&self) -> u8 {
        match self {
            BaseElement::Int(_) => 0,
            BaseElement::Vector(_) => 1,
            BaseElement::Word(_) => 2,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            BaseElement::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&FreeWord> {
        match self {
            BaseElement::Word(w) => Some(w),
            _ => None,
        }
    }
}

/// Natural order on integers, lexicographic order on vectors, ShortLex on
/// words. Within one variant this is the frozen total order of the base group.
impl PartialOrd for BaseElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BaseElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BaseElement::Int(a), BaseElement::Int(b)) => a.cmp(b),
            (BaseElement::Vector(a), BaseElement::Vector(b)) => a.cmp(b),
            (BaseElement::Word(a), BaseElement::Word(b)) => a.cmp(b),
            _ => self.variant_rank().cmp(&other.variant_rank()),
        }
    }
}

/// The frozen total order on a base group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TotalOrder {
    Natural,
    Lexicographic,
    ShortLex,
}

impl TotalOrder {
    pub fn compare(self, x: &BaseElement, y: &BaseElement) -> Result<Ordering> {
        match (self, x, y) {
            (TotalOrder::Natural, BaseElement::Int(_), BaseElement::Int(_))
            | (TotalOrder::Lexicographic, BaseElement::Vector(_), BaseElement::Vector(_))
            | (TotalOrder::ShortLex, BaseElement::Word(_), BaseElement::Word(_)) => Ok(x.cmp(y)),
            _ => Err(Error::mismatch(format!("{self:?} order"))),
        }
    }
}

/// A base group `H`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BaseGroup {
    Integers,
    Lattice(usize),
    Free(usize),
    /// `ℤ/n`, used for finite quotients.
    Cyclic(u64),
}

impl fmt::Display for BaseGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGroup::Integers => write!(f, "Z"),
            BaseGroup::Lattice(d) => write!(f, "Z^{d}"),
            BaseGroup::Free(r) => write!(f, "F_{r}"),
            BaseGroup::Cyclic(n) => write!(f, "Z/{n}"),
        }
    }
}

impl BaseGroup {
    pub fn identity(&self) -> BaseElement {
        match self {
            BaseGroup::Integers | BaseGroup::Cyclic(_) => BaseElement::Int(0),
            BaseGroup::Lattice(d) => BaseElement::Vector(vec![0; *d]),
            BaseGroup::Free(_) => BaseElement::Word(FreeWord::identity()),
        }
    }

    pub fn is_identity(&self, x: &BaseElement) -> bool {
        *x == self.identity()
    }

    /// Number of basis generators.
    pub fn rank(&self) -> usize {
        match self {
            BaseGroup::Integers | BaseGroup::Cyclic(_) => 1,
            BaseGroup::Lattice(d) => *d,
            BaseGroup::Free(r) => *r,
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        !matches!(self, BaseGroup::Cyclic(_))
    }

    /// Whether left translation preserves the frozen order.
    pub fn translations_preserve_order(&self) -> bool {
        matches!(self, BaseGroup::Integers | BaseGroup::Lattice(_))
    }

    pub fn contains(&self, x: &BaseElement) -> bool {
        match (self, x) {
            (BaseGroup::Integers, BaseElement::Int(_)) => true,
            (BaseGroup::Cyclic(n), BaseElement::Int(k)) => *k >= 0 && (*k as u64) < *n,
            (BaseGroup::Lattice(d), BaseElement::Vector(v)) => v.len() == *d,
            (BaseGroup::Free(r), BaseElement::Word(w)) => w.letters().iter().all(|l| l.index() < *r),
            _ => false,
        }
    }

    pub fn check(&self, x: &BaseElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::mismatch(self.to_string()))
        }
    }

    pub fn multiply(&self, x: &BaseElement, y: &BaseElement) -> Result<BaseElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn inverse(&self, x: &BaseElement) -> Result<BaseElement> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    /// Unchecked product; panics on elements of the wrong variant.
    pub(crate) fn mul(&self, x: &BaseElement, y: &BaseElement) -> BaseElement {
        match (self, x, y) {
            (BaseGroup::Integers, BaseElement::Int(a), BaseElement::Int(b)) => {
                BaseElement::Int(a.checked_add(*b).expect("integer overflow in base group"))
            }
            (BaseGroup::Cyclic(n), BaseElement::Int(a), BaseElement::Int(b)) => {
                BaseElement::Int(((*a as i128 + *b as i128).rem_euclid(*n as i128)) as i64)
            }
            (BaseGroup::Lattice(_), BaseElement::Vector(a), BaseElement::Vector(b)) => {
                BaseElement::Vector(a.iter().zip(b).map(|(p, q)| p + q).collect())
            }
            (BaseGroup::Free(_), BaseElement::Word(a), BaseElement::Word(b)) => {
                BaseElement::Word(a.mul(b))
            }
            _ => panic!("base element does not belong to {self}"),
        }
    }

    pub(crate) fn inv(&self, x: &BaseElement) -> BaseElement {
        match (self, x) {
            (BaseGroup::Integers, BaseElement::Int(a)) => BaseElement::Int(-a),
            (BaseGroup::Cyclic(n), BaseElement::Int(a)) => {
                BaseElement::Int(((-(*a as i128)).rem_euclid(*n as i128)) as i64)
            }
            (BaseGroup::Lattice(_), BaseElement::Vector(a)) => {
                BaseElement::Vector(a.iter().map(|p| -p).collect())
            }
            (BaseGroup::Free(_), BaseElement::Word(a)) => BaseElement::Word(a.inverse()),
            _ => panic!("base element does not belong to {self}"),
        }
    }

    /// `x⁻¹ · y`.
    pub(crate) fn ldiv(&self, x: &BaseElement, y: &BaseElement) -> BaseElement {
        match (self, x, y) {
            (BaseGroup::Integers, BaseElement::Int(a), BaseElement::Int(b)) => BaseElement::Int(b - a),
            _ => self.mul(&self.inv(x), y),
        }
    }

    pub fn order(&self) -> TotalOrder {
        match self {
            BaseGroup::Integers | BaseGroup::Cyclic(_) => TotalOrder::Natural,
            BaseGroup::Lattice(_) => TotalOrder::Lexicographic,
            BaseGroup::Free(_) => TotalOrder::ShortLex,
        }
    }

    pub fn compare(&self, x: &BaseElement, y: &BaseElement) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        self.order().compare(x, y)
    }

    /// All signed basis letters in the fixed order.
    pub fn letters(&self) -> Vec<Letter> {
        Letter::all(self.rank())
    }

    /// The base element represented by a signed basis letter.
    pub fn generator(&self, l: Letter) -> BaseElement {
        match self {
            BaseGroup::Integers => BaseElement::Int(l.sign()),
            BaseGroup::Cyclic(n) => BaseElement::Int(l.sign().rem_euclid(*n as i64)),
            BaseGroup::Lattice(d) => {
                let mut v = vec![0; *d];
                v[l.index()] = l.sign();
                BaseElement::Vector(v)
            }
            BaseGroup::Free(_) => BaseElement::Word(FreeWord::from_letters([l])),
        }
    }

    /// Word length with respect to the basis letters.
    pub fn word_length(&self, x: &BaseElement) -> usize {
        match (self, x) {
            (BaseGroup::Integers, BaseElement::Int(a)) => a.unsigned_abs() as usize,
            (BaseGroup::Cyclic(n), BaseElement::Int(a)) => {
                let a = *a as u64 % n;
                a.min(n - a) as usize
            }
            (BaseGroup::Lattice(_), BaseElement::Vector(v)) => {
                v.iter().map(|p| p.unsigned_abs() as usize).sum()
            }
            (BaseGroup::Free(_), BaseElement::Word(w)) => w.len(),
            _ => panic!("base element does not belong to {self}"),
        }
    }

    /// A geodesic word for `x` in the basis letters.
    pub fn geodesic(&self, x: &BaseElement) -> Vec<Letter> {
        let pow = |i: usize, n: i64| vec![Letter::new(i, n < 0); n.unsigned_abs() as usize];
        match (self, x) {
            (BaseGroup::Integers, BaseElement::Int(a)) => pow(0, *a),
            (BaseGroup::Cyclic(n), BaseElement::Int(a)) => {
                let n = *n as i64;
                if 2 * a <= n {
                    pow(0, *a)
                } else {
                    pow(0, a - n)
                }
            }
            (BaseGroup::Lattice(_), BaseElement::Vector(v)) => {
                v.iter().enumerate().flat_map(|(i, &c)| pow(i, c)).collect()
            }
            (BaseGroup::Free(_), BaseElement::Word(w)) => w.letters().to_vec(),
            _ => panic!("base element does not belong to {self}"),
        }
    }

    /// Default radius cap for `enumerate_ball`.
    pub fn default_ball_limit(&self) -> usize {
        match self {
            BaseGroup::Integers | BaseGroup::Cyclic(_) => 12,
            BaseGroup::Lattice(d) if *d <= 2 => 10,
            BaseGroup::Lattice(_) => 6,
            BaseGroup::Free(r) if *r <= 2 => 8,
            BaseGroup::Free(_) => 5,
        }
    }

    pub fn enumerate_ball(&self, radius: usize) -> Result<Vec<BaseElement>> {
        self.enumerate_ball_with_limit(radius, self.default_ball_limit())
    }

    /// Elements of word length at most `radius`, sorted by length and then
    /// by the frozen order.
    pub fn enumerate_ball_with_limit(&self, radius: usize, limit: usize) -> Result<Vec<BaseElement>> {
        if radius > limit {
            return Err(Error::LimitExceeded {
                what: "ball radius",
                value: radius,
                limit,
            });
        }
        let mut seen: BTreeSet<BaseElement> = BTreeSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in &frontier {
                for l in self.letters() {
                    let y = self.mul(x, &self.generator(l));
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<BaseElement> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            self.word_length(a)
                .cmp(&self.word_length(b))
                .then_with(|| a.cmp(b))
        });
        Ok(out)
    }

    pub fn letter_char(&self, l: Letter) -> char {
        let c = match self {
            BaseGroup::Free(r) if *r > 1 => FREE_LETTERS[l.index()] as char,
            BaseGroup::Lattice(d) if *d > 1 => FREE_LETTERS[l.index()] as char,
            _ => 't',
        };
        if l.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn parse_letter(&self, c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let index = if self.rank() == 1 {
            (lower == 't').then_some(0)?
        } else {
            FREE_LETTERS[..self.rank().min(FREE_LETTERS.len())]
                .iter()
                .position(|&b| b as char == lower)?
        };
        Some(Letter::new(index, c.is_ascii_uppercase()))
    }

    /// Parses an element: an integer for `ℤ` and `ℤ/n`, `(a,b,..)` for
    /// lattices, a word such as `sTt` (or `e` for the identity) for free
    /// groups.
    pub fn parse_element(&self, text: &str) -> Result<BaseElement> {
        let t = text.trim();
        let x = match self {
            BaseGroup::Integers | BaseGroup::Cyclic(_) => {
                let v: i64 = t
                    .parse()
                    .map_err(|_| Error::parse(0, format!("expected an integer, found {t:?}")))?;
                match self {
                    BaseGroup::Cyclic(n) => BaseElement::Int(v.rem_euclid(*n as i64)),
                    _ => BaseElement::Int(v),
                }
            }
            BaseGroup::Lattice(d) => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::parse(0, "expected a vector (a,b,...)"))?;
                let v = inner
                    .split(',')
                    .map(|p| p.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(0, format!("bad vector {t:?}")))?;
                if v.len() != *d {
                    return Err(Error::parse(0, format!("expected {d} coordinates")));
                }
                BaseElement::Vector(v)
            }
            BaseGroup::Free(_) => {
                if t == "e" || t == "1" {
                    return Ok(self.identity());
                }
                let mut w = FreeWord::identity();
                for (i, c) in t.char_indices() {
                    let l = self
                        .parse_letter(c)
                        .ok_or_else(|| Error::parse(i, format!("unknown letter {c:?}")))?;
                    w.push(l);
                }
                BaseElement::Word(w)
            }
        };
        self.check(&x)?;
        Ok(x)
    }

    pub fn format_element(&self, x: &BaseElement) -> String {
        match x {
            BaseElement::Int(n) => n.to_string(),
            BaseElement::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            BaseElement::Word(w) if w.is_empty() => "e".to_string(),
            BaseElement::Word(w) => w.letters().iter().map(|&l| self.letter_char(l)).collect(),
        }
    }
}

/// The subtree of the Cayley tree of a free group spanned by a finite set of
/// vertices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TreeHull {
    vertices: BTreeSet<FreeWord>,
}

impl TreeHull {
    /// Hull of a set of words; empty input gives the empty hull.
    pub fn of_words<'a, I: IntoIterator<Item = &'a FreeWord>>(points: I) -> TreeHull {
        let mut it = points.into_iter();
        let mut vertices = BTreeSet::new();
        if let Some(root) = it.next() {
            vertices.insert(root.clone());
            for p in it {
                vertices.extend(segment(root, p));
            }
        }
        TreeHull { vertices }
    }

    pub fn vertices(&self) -> &BTreeSet<FreeWord> {
        &self.vertices
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        self.vertices.contains(w)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges of the hull; a subtree has one fewer edge than vertices.
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

fn segment(x: &FreeWord, y: &FreeWord) -> Vec<FreeWord> {
    let c = x.common_prefix_len(y);
    let mut out: Vec<FreeWord> = (c..=x.len()).rev().map(|i| x.prefix(i)).collect();
    out.extend((c + 1..=y.len()).map(|i| y.prefix(i)));
    out
}

fn words_of(points: &[BaseElement]) -> Result<Vec<&FreeWord>> {
    points
        .iter()
        .map(|p| p.as_word().ok_or_else(|| Error::mismatch("a free group")))
        .collect()
}

/// Smallest subtree of the Cayley tree containing all the points.
pub fn steiner_hull(points: &[BaseElement]) -> Result<TreeHull> {
    Ok(TreeHull::of_words(words_of(points)?))
}

/// The vertices of the unique geodesic from `x` to `y`, in order.
pub fn geodesic_segment(x: &BaseElement, y: &BaseElement) -> Result<Vec<BaseElement>> {
    let pair = [x.clone(), y.clone()];
    let w = words_of(&pair)?;
    Ok(segment(w[0], w[1]).into_iter().map(BaseElement::Word).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &BaseGroup, s: &str) -> BaseElement {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn free_product_cancels() {
        let f = BaseGroup::Free(2);
        assert_eq!(f.multiply(&w(&f, "st"), &w(&f, "TS")).unwrap(), f.identity());
        assert_eq!(f.format_element(&f.mul(&w(&f, "sT"), &w(&f, "ts"))), "ss");
    }

    #[test]
    fn shortlex_letter_order() {
        let f = BaseGroup::Free(2);
        let order = ["s", "S", "t", "T"];
        for pair in order.windows(2) {
            assert_eq!(f.compare(&w(&f, pair[0]), &w(&f, pair[1])).unwrap(), Ordering::Less);
        }
        assert_eq!(f.compare(&w(&f, "T"), &w(&f, "ss")).unwrap(), Ordering::Less);
    }

    #[test]
    fn ball_of_integers() {
        let z = BaseGroup::Integers;
        let ball: Vec<i64> = z.enumerate_ball(2).unwrap().iter().map(|x| x.as_int().unwrap()).collect();
        assert_eq!(ball, vec![0, -1, 1, -2, 2]);
        assert!(z.enumerate_ball(13).is_err());
    }

    #[test]
    fn ball_sizes_in_free_group() {
        let f = BaseGroup::Free(2);
        for r in 0..5 {
            let expect = if r == 0 { 1 } else { 1 + 2 * (3usize.pow(r as u32) - 1) };
            assert_eq!(f.enumerate_ball(r).unwrap().len(), expect);
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let z = BaseGroup::Integers;
        let f = BaseGroup::Free(2);
        assert!(z.multiply(&z.identity(), &f.identity()).is_err());
        assert!(TotalOrder::ShortLex.compare(&z.identity(), &z.identity()).is_err());
    }

    #[test]
    fn hull_of_two_branches() {
        let f = BaseGroup::Free(2);
        let hull = steiner_hull(&[f.identity(), w(&f, "ss"), w(&f, "st")]).unwrap();
        assert_eq!(hull.vertex_count(), 4);
        assert_eq!(hull.edge_count(), 3);
        let seg = geodesic_segment(&w(&f, "ss"), &w(&f, "tt")).unwrap();
        assert_eq!(seg.len(), 5);
    }

    #[test]
    fn cyclic_decomposition_conjugates_back() {
        let f = BaseGroup::Free(2);
        let x = w(&f, "stsTS");
        let (p, c) = x.as_word().unwrap().cyclic_decomposition();
        assert_eq!(f.format_element(&BaseElement::Word(c.clone())), "s");
        assert_eq!(p.mul(&c).mul(&p.inverse()), *x.as_word().unwrap());
    }

    #[test]
    fn rank_one_alphabet() {
        let f = BaseGroup::Free(1);
        assert_eq!(f.format_element(&w(&f, "ttT")), "t");
    }
}
