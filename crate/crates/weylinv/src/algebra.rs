//! Exact scalar arithmetic and small dense linear algebra.
//!
//! Two scalar kinds cover every root system in scope: arbitrary-precision
//! rationals for the crystallographic types, and the quadratic extension
//! ℚ(φ) with φ² = φ + 1 for the types H3 and H4.  Group-theoretic decisions
//! are never made in floating point; `Scalar::approx` exists purely so tests
//! can sanity-check golden-field identities numerically.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: BigInt::from(n), den: BigInt::from(1) }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn zero() -> Self {
        Rational::from_int(0)
    }

    pub fn one() -> Self {
        Rational::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.num.is_zero() {
            0
        } else if self.num.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational::new(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational::new(&self.num * &other.den - &other.num * &self.den, &self.den * &other.den)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Rational) -> Rational {
        assert!(!other.is_zero(), "division by zero");
        Rational::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn neg(&self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Which field a scalar computes in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarKind {
    Rational,
    Golden,
}

/// An exact scalar: either a rational, or `a + b·φ` in ℚ(φ).
///
/// Equality, ordering and hashing are by value (a rational-kind `q` equals a
/// golden-kind `q + 0·φ`), while the kind tag records which field arithmetic
/// stays closed in.  No φ² term can survive: the pair `(a, b)` is canonical.
#[derive(Clone)]
pub struct Scalar {
    kind: ScalarKind,
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub fn rational(a: Rational) -> Self {
        Scalar { kind: ScalarKind::Rational, a, b: Rational::zero() }
    }

    pub fn golden(a: Rational, b: Rational) -> Self {
        Scalar { kind: ScalarKind::Golden, a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::rational(Rational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::rational(Rational::ratio(num, den))
    }

    /// `num/den + (gnum/gden)·φ`, golden kind.
    pub fn golden_ratio(num: i64, den: i64, gnum: i64, gden: i64) -> Self {
        Scalar::golden(Rational::ratio(num, den), Rational::ratio(gnum, gden))
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Scalar { kind, a: Rational::zero(), b: Rational::zero() }
    }

    pub fn one(kind: ScalarKind) -> Self {
        Scalar { kind, a: Rational::one(), b: Rational::zero() }
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn phi_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn join(&self, other: &Scalar) -> ScalarKind {
        if self.kind == ScalarKind::Golden || other.kind == ScalarKind::Golden {
            ScalarKind::Golden
        } else {
            ScalarKind::Rational
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        Scalar { kind: self.join(other), a: self.a.add(&other.a), b: self.b.add(&other.b) }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        Scalar { kind: self.join(other), a: self.a.sub(&other.a), b: self.b.sub(&other.b) }
    }

    /// `(a₁+b₁φ)(a₂+b₂φ) = a₁a₂+b₁b₂ + (a₁b₂+a₂b₁+b₁b₂)φ` since φ² = φ+1.
    pub fn mul(&self, other: &Scalar) -> Scalar {
        let a = self.a.mul(&other.a).add(&self.b.mul(&other.b));
        let b = self.a.mul(&other.b).add(&self.b.mul(&other.a)).add(&self.b.mul(&other.b));
        Scalar { kind: self.join(other), a, b }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { kind: self.kind, a: self.a.neg(), b: self.b.neg() }
    }

    /// Multiplicative inverse via the Galois conjugate φ ↦ 1 − φ:
    /// `(a+bφ)((a+b)−bφ) = a² + ab − b²`.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        let norm = self.a.mul(&self.a).add(&self.a.mul(&self.b)).sub(&self.b.mul(&self.b));
        Scalar {
            kind: self.kind,
            a: self.a.add(&self.b).div(&norm),
            b: self.b.neg().div(&norm),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Exact sign of the real value `a + b·φ` with φ = (1+√5)/2: write it as
    /// `(u + v√5)/2` with u = 2a+b, v = b and compare `u²` against `5v²` when
    /// the two parts disagree.
    pub fn signum(&self) -> i32 {
        let u = self.a.add(&self.a).add(&self.b);
        let v = &self.b;
        match (u.signum(), v.signum()) {
            (0, sv) => sv,
            (su, 0) => su,
            (su, sv) if su == sv => su,
            (su, _) => {
                let u2 = u.mul(&u);
                let v5 = v.mul(v).mul(&Rational::from_int(5));
                match u2.cmp(&v5) {
                    Ordering::Greater => su,
                    Ordering::Less => -su,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Floating-point image, for test-side sanity checks only.
    pub fn approx(&self) -> f64 {
        const PHI: f64 = 1.618_033_988_749_895;
        self.a.to_f64() + self.b.to_f64() * PHI
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sub(other).signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}φ", self.b)
        } else {
            write!(f, "{}+{}φ", self.a, self.b)
        }
    }
}

/// Dense vector of scalars.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVector(pub Vec<Scalar>);

impl ExactVector {
    pub fn zeros(n: usize, kind: ScalarKind) -> Self {
        ExactVector(vec![Scalar::zero(kind); n])
    }

    pub fn unit(n: usize, i: usize, kind: ScalarKind) -> Self {
        let mut v = Self::zeros(n, kind);
        v.0[i] = Scalar::one(kind);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &ExactVector) -> ExactVector {
        assert_eq!(self.len(), other.len());
        ExactVector(self.0.iter().zip(&other.0).map(|(x, y)| x.add(y)).collect())
    }

    pub fn sub(&self, other: &ExactVector) -> ExactVector {
        assert_eq!(self.len(), other.len());
        ExactVector(self.0.iter().zip(&other.0).map(|(x, y)| x.sub(y)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> ExactVector {
        ExactVector(self.0.iter().map(|x| x.mul(c)).collect())
    }

    pub fn neg(&self) -> ExactVector {
        ExactVector(self.0.iter().map(Scalar::neg).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Sum of coordinates; the height of a root in simple-root coordinates.
    pub fn coord_sum(&self) -> Scalar {
        let kind = self.0.first().map_or(ScalarKind::Rational, Scalar::kind);
        self.0.iter().fold(Scalar::zero(kind), |acc, x| acc.add(x))
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, kind: ScalarKind) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(kind); rows * cols] }
    }

    pub fn identity(n: usize, kind: ScalarKind) -> Self {
        let mut m = Self::zeros(n, n, kind);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one(kind);
        }
        m
    }

    pub fn from_rows(rows: Vec<ExactVector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, ExactVector::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.0);
        }
        ExactMatrix { rows: r, cols: c, data }
    }

    pub fn from_columns(cols: Vec<ExactVector>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, ExactVector::len);
        let mut m = Self::zeros(r, c, ScalarKind::Rational);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, x) in col.0.into_iter().enumerate() {
                *m.at_mut(i, j) = x;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> ExactVector {
        ExactVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> ExactVector {
        ExactVector((0..self.rows).map(|i| self.at(i, j).clone()).collect())
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x.add(y)).collect(),
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x.sub(y)).collect(),
        }
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn matmul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let kind = self.data.first().map_or(ScalarKind::Rational, Scalar::kind);
        let mut out = ExactMatrix::zeros(self.rows, other.cols, kind);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.at(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let acc = out.at(i, j).add(&x.mul(other.at(k, j)));
                    *out.at_mut(i, j) = acc;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &ExactVector) -> ExactVector {
        assert_eq!(self.cols, v.len());
        let kind = self.data.first().map_or(ScalarKind::Rational, Scalar::kind);
        let mut out = ExactVector::zeros(self.rows, kind);
        for i in 0..self.rows {
            let mut acc = Scalar::zero(kind);
            for j in 0..self.cols {
                acc = acc.add(&self.at(i, j).mul(&v.0[j]));
            }
            out.0[i] = acc;
        }
        out
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let kind = self.data.first().map_or(ScalarKind::Rational, Scalar::kind);
        (0..self.rows).fold(Scalar::zero(kind), |acc, i| acc.add(self.at(i, i)))
    }

    /// Rank over the fraction field, by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        rank_with_pivoting(self, false)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Bareiss elimination; `reverse_pivots` selects pivots from the bottom row
/// upward instead, giving an independent pivoting order for cross-checks.
pub fn rank_with_pivoting(m: &ExactMatrix, reverse_pivots: bool) -> usize {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut prev = Scalar::from_int(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot_row = if reverse_pivots {
            (rank..rows).rev().find(|&r| !a.at(r, col).is_zero())
        } else {
            (rank..rows).find(|&r| !a.at(r, col).is_zero())
        };
        let Some(p) = pivot_row else { continue };
        if p != rank {
            for j in 0..cols {
                let x = a.at(p, j).clone();
                let y = a.at(rank, j).clone();
                *a.at_mut(p, j) = y;
                *a.at_mut(rank, j) = x;
            }
        }
        let pivot = a.at(rank, col).clone();
        for r in rank + 1..rows {
            let head = a.at(r, col).clone();
            for j in 0..cols {
                // One-step fraction-free update: (pivot·a[r][j] − head·a[rank][j]) / prev.
                let v =
                    pivot.mul(a.at(r, j)).sub(&head.mul(a.at(rank, j))).div(&prev);
                *a.at_mut(r, j) = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Row-echelon basis that supports exact span-membership queries.
pub struct Echelon {
    cols: usize,
    /// Rows with strictly increasing pivot columns, pivots scaled to 1.
    rows: Vec<ExactVector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize, _kind: ScalarKind) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a>(cols: usize, kind: ScalarKind, vs: impl IntoIterator<Item = &'a ExactVector>) -> Self {
        let mut e = Echelon::new(cols, kind);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the residue.
    pub fn reduce(&self, v: &ExactVector) -> ExactVector {
        assert_eq!(v.len(), self.cols);
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r.0[p].is_zero() {
                let c = r.0[p].clone();
                r = r.sub(&row.scale(&c));
            }
        }
        r
    }

    pub fn contains(&self, v: &ExactVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &ExactVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.0.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r.0[p].inv();
        let row = r.scale(&inv);
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.rows.insert(pos, row);
        self.pivots.insert(pos, p);
        true
    }
}
