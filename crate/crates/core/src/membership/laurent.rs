use std::fmt;

/// A Laurent polynomial over the two-element field: bit `i` of `bits` is the
/// coefficient of `s^(low + i)`. Normalized so that the lowest and highest
/// stored bits are set, or `bits` is empty for zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    bits: Vec<u64>,
}

fn xor_shifted(buf: &mut Vec<u64>, src: &[u64], offset: usize) {
    let (word, bit) = (offset / 64, offset % 64);
    let need = word + src.len() + 1;
    if buf.len() < need {
        buf.resize(need, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        buf[word + i] ^= w << bit;
        if bit != 0 {
            buf[word + i + 1] ^= w >> (64 - bit);
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0)
    }

    pub fn monomial(e: i64) -> Self {
        LaurentPoly { low: e, bits: vec![1] }
    }

    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let mut p = LaurentPoly::zero();
        for e in exps {
            p = p.add(&LaurentPoly::monomial(e));
        }
        p
    }

    fn from_buffer(low: i64, mut buf: Vec<u64>) -> Self {
        while buf.last() == Some(&0) {
            buf.pop();
        }
        let Some(first) = buf.iter().position(|&w| w != 0) else {
            return LaurentPoly::zero();
        };
        let shift = first * 64 + buf[first].trailing_zeros() as usize;
        let mut out = Vec::new();
        let mut i = shift;
        let total = buf.len() * 64;
        while i < total {
            let (w, b) = (i / 64, i % 64);
            let mut chunk = buf[w] >> b;
            if b != 0 && w + 1 < buf.len() {
                chunk |= buf[w + 1] << (64 - b);
            }
            out.push(chunk);
            i += 64;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        LaurentPoly {
            low: low + shift as i64,
            bits: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    /// Lowest exponent, `None` for zero.
    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high(&self) -> Option<i64> {
        let top = self.bits.last()?;
        Some(self.low + (self.bits.len() as i64 - 1) * 64 + 63 - top.leading_zeros() as i64)
    }

    /// `high − low`, the Euclidean size; zero for units.
    pub fn span(&self) -> Option<u64> {
        Some((self.high()? - self.low) as u64)
    }

    pub fn is_unit(&self) -> bool {
        self.span() == Some(0)
    }

    pub fn coefficient(&self, e: i64) -> bool {
        if self.is_zero() || e < self.low {
            return false;
        }
        let i = (e - self.low) as usize;
        self.bits.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn exponents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (w, &word) in self.bits.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros() as i64;
                out.push(self.low + w as i64 * 64 + b);
                x &= x - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let mut buf = Vec::new();
        xor_shifted(&mut buf, &self.bits, (self.low - low) as usize);
        xor_shifted(&mut buf, &other.bits, (other.low - low) as usize);
        LaurentPoly::from_buffer(low, buf)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut buf = Vec::new();
        for e in self.exponents() {
            xor_shifted(&mut buf, &other.bits, (e - self.low) as usize);
        }
        LaurentPoly::from_buffer(self.low + other.low, buf)
    }

    /// Multiplication by the unit `s^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low + e,
            bits: self.bits.clone(),
        }
    }

    /// `(q, r)` with `self = q·d + r` and `r = 0` or `span(r) < span(d)`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::zero());
        }
        let dspan = d.span().unwrap_or(0) as i64;
        let mut rem = self.shift(-self.low);
        let divisor = d.shift(-d.low);
        let mut q = LaurentPoly::zero();
        while let Some(h) = rem.high() {
            if h < dspan {
                break;
            }
            let m = LaurentPoly::monomial(h - dspan);
            rem = rem.add(&divisor.mul(&m));
            q = q.add(&m);
        }
        (q.shift(self.low - d.low), rem.shift(self.low))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "s".to_string(),
                _ => format!("s^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::from_exponents([-1, 0, 70]);
        assert_eq!(p.exponents(), vec![-1, 0, 70]);
        assert_eq!(p.span(), Some(71));
        let sq = p.mul(&p);
        assert_eq!(sq.exponents(), vec![-2, 0, 140]);
        assert!(p.add(&p).is_zero());
        assert!(LaurentPoly::monomial(-5).is_unit());
    }

    #[test]
    fn division() {
        let a = LaurentPoly::from_exponents([-3, 0, 2, 5]);
        let d = LaurentPoly::from_exponents([1, 2]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.is_zero() || r.span() < d.span());
    }
}
