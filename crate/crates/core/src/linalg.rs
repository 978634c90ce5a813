//! Exact rank computation over the rationals and prime fields.
//!
//! Both kernels run the same sparse elimination skeleton with a
//! Markowitz-style pivot rule: the pivot column is the one of minimal
//! nonzero count (ties broken by smallest index), the pivot row has the
//! fewest nonzeros among rows hitting that column (ties by smallest row
//! index). Over the rationals, rows are scaled to integers and eliminated
//! fraction-free with arbitrary-precision arithmetic; over GF(p) the
//! elimination is plain modular arithmetic on machine words.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field selector: the rationals or GF(p) for a prime p.
///
/// Opaque so that the primality invariant is enforced at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec(Kind);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// GF(p); errors unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec(Kind::Prime(p)))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub(crate) fn kind_prime(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// Parses `q`/`Q` or a prime number.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::rationals());
        }
        match t.parse::<u64>() {
            Ok(p) => FieldSpec::prime(p),
            Err(_) => Err(Error::InvalidFieldSpec(s.to_string())),
        }
    }
}

/// Deterministic Miller–Rabin, valid for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a ≠ 0 mod p.
    pow_mod(a, p - 2, p)
}

/// Sparse matrix with unique in-range positions and no explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix<S> {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<(usize, usize, S)>,
}

impl<S: Clone + PartialEq + Zero> SparseMatrix<S> {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix {
            n_rows,
            n_cols,
            entries: Vec::new(),
        }
    }

    /// Validates ranges, duplicate positions, and explicit zeros.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        mut entries: Vec<(usize, usize, S)>,
    ) -> Result<Self> {
        entries.sort_by_key(|(r, c, _)| (*r, *c));
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 && window[0].1 == window[1].1 {
                return Err(Error::DuplicateEntry {
                    row: window[0].0,
                    col: window[0].1,
                });
            }
        }
        for (r, c, v) in &entries {
            if *r >= n_rows || *c >= n_cols {
                return Err(Error::EntryOutOfBounds {
                    row: *r,
                    col: *c,
                    n_rows,
                    n_cols,
                });
            }
            if v.is_zero() {
                return Err(Error::ZeroEntry { row: *r, col: *c });
            }
        }
        Ok(SparseMatrix {
            n_rows,
            n_cols,
            entries,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, S)] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<(usize, usize, S)> = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.clone()))
            .collect();
        entries.sort_by_key(|(r, c, _)| (*r, *c));
        SparseMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            entries,
        }
    }

    fn rows(&self) -> Vec<Vec<(u32, S)>> {
        let mut rows = vec![Vec::new(); self.n_rows];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c as u32, v.clone()));
        }
        rows
    }
}

/// A coefficient field with exact arithmetic and its rank kernel.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug + Zero + Send + Sync;

    fn spec(&self) -> FieldSpec;

    /// The image of an integer in the field.
    fn from_integer(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Exact rank of a sparse matrix over this field.
    fn rank(&self, m: &SparseMatrix<Self::Elem>) -> usize;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn from_integer(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn rank(&self, m: &SparseMatrix<BigRational>) -> usize {
        // Clear denominators row-wise (rank-preserving), then eliminate
        // fraction-free in BigInt.
        let rows: Vec<Vec<(u32, BigInt)>> = m
            .rows()
            .into_iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                row.into_iter()
                    .map(|(c, v)| {
                        let scaled = v.numer() * (&lcm / v.denom());
                        (c, scaled)
                    })
                    .collect()
            })
            .collect();
        sparse_rank(&IntEliminator, rows, m.n_cols)
    }
}

/// GF(p) for a machine-word prime p; elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub(crate) fn new_unchecked(p: u64) -> Self {
        debug_assert!(is_prime_u64(p));
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec(Kind::Prime(self.p))
    }

    fn from_integer(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }

    fn rank(&self, m: &SparseMatrix<u64>) -> usize {
        let rows: Vec<Vec<(u32, u64)>> = m
            .rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .filter_map(|(c, v)| {
                        let v = v % self.p;
                        (v != 0).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        sparse_rank(&ModEliminator { p: self.p }, rows, m.n_cols)
    }
}

/// Free-function form of the rank kernel.
pub fn rank<F: Field>(m: &SparseMatrix<F::Elem>, field: &F) -> usize {
    field.rank(m)
}

/// Dispatches a generic function over the runtime field selector.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec.kind_prime() {
            None => {
                let $f = &$crate::linalg::Rationals;
                $body
            }
            Some(p) => {
                let $f = &$crate::linalg::PrimeField::new_unchecked(p);
                $body
            }
        }
    };
}
pub(crate) use with_field;

/// One row-elimination step; the only part that differs between fields.
trait RowEliminator {
    type Entry: Clone + PartialEq;

    /// Combines `target` with `pivot_row` so the entry at `pivot_col`
    /// cancels. Both rows are sorted by column; the result is too, with
    /// zeros and the pivot column dropped.
    fn eliminate(
        &self,
        pivot_col: u32,
        pivot_val: &Self::Entry,
        pivot_row: &[(u32, Self::Entry)],
        coef: &Self::Entry,
        target: &[(u32, Self::Entry)],
    ) -> Vec<(u32, Self::Entry)>;
}

struct ModEliminator {
    p: u64,
}

impl RowEliminator for ModEliminator {
    type Entry = u64;

    fn eliminate(
        &self,
        pivot_col: u32,
        pivot_val: &u64,
        pivot_row: &[(u32, u64)],
        coef: &u64,
        target: &[(u32, u64)],
    ) -> Vec<(u32, u64)> {
        let p = self.p;
        let factor = mul_mod(*coef, inv_mod(*pivot_val, p), p);
        merge_rows(pivot_col, target, pivot_row, |t, s| {
            let sub = mul_mod(factor, *s, p);
            (t + p - sub) % p
        })
        .into_iter()
        .filter(|(_, v)| *v != 0)
        .collect()
    }
}

struct IntEliminator;

impl RowEliminator for IntEliminator {
    type Entry = BigInt;

    fn eliminate(
        &self,
        pivot_col: u32,
        pivot_val: &BigInt,
        pivot_row: &[(u32, BigInt)],
        coef: &BigInt,
        target: &[(u32, BigInt)],
    ) -> Vec<(u32, BigInt)> {
        let mut out: Vec<(u32, BigInt)> =
            merge_rows(pivot_col, target, pivot_row, |t, s| t * pivot_val - s * coef)
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .collect();
        // GCD normalization keeps fraction-free growth in check.
        let mut g = BigInt::zero();
        for (_, v) in &out {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for (_, v) in &mut out {
                *v = &*v / &g;
            }
        }
        out
    }
}

/// Merges two sorted rows with `combine(target, source)` applied positionwise
/// (missing entries act as zero via the closure's linearity), skipping
/// `pivot_col`. The closure receives references so each eliminator can use
/// its own arithmetic.
fn merge_rows<S: Clone + Zero>(
    pivot_col: u32,
    target: &[(u32, S)],
    source: &[(u32, S)],
    combine: impl Fn(&S, &S) -> S,
) -> Vec<(u32, S)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    let zero = S::zero();
    while i < target.len() || j < source.len() {
        let tc = target.get(i).map(|(c, _)| *c);
        let sc = source.get(j).map(|(c, _)| *c);
        let take_target = matches!((tc, sc), (Some(a), Some(b)) if a <= b) || sc.is_none();
        let take_source = matches!((tc, sc), (Some(a), Some(b)) if b <= a) || tc.is_none();
        let col = if take_target { tc.unwrap() } else { sc.unwrap() };
        let t = if take_target {
            let v = &target[i].1;
            i += 1;
            v
        } else {
            &zero
        };
        let s = if take_source {
            let v = &source[j].1;
            j += 1;
            v
        } else {
            &zero
        };
        if col == pivot_col {
            continue;
        }
        out.push((col, combine(t, s)));
    }
    out
}

/// Markowitz-style sparse elimination; returns the rank.
fn sparse_rank<E: RowEliminator>(
    elim: &E,
    mut rows: Vec<Vec<(u32, E::Entry)>>,
    n_cols: usize,
) -> usize {
    let mut col_count = vec![0usize; n_cols];
    for row in &rows {
        for (c, _) in row {
            col_count[*c as usize] += 1;
        }
    }
    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut rank = 0;
    loop {
        let mut pivot_col: Option<usize> = None;
        for (c, count) in col_count.iter().enumerate() {
            if *count > 0 && pivot_col.map_or(true, |pc| *count < col_count[pc]) {
                pivot_col = Some(c);
            }
        }
        let Some(pivot_col) = pivot_col else { break };
        let pc = pivot_col as u32;

        let mut pivot_row: Option<usize> = None;
        for (ri, row) in rows.iter().enumerate() {
            if active[ri] && row.binary_search_by_key(&pc, |(c, _)| *c).is_ok() {
                if pivot_row.map_or(true, |pr| row.len() < rows[pr].len()) {
                    pivot_row = Some(ri);
                }
            }
        }
        let pr = pivot_row.expect("column count positive implies an active row");
        rank += 1;

        active[pr] = false;
        let pivot = std::mem::take(&mut rows[pr]);
        for (c, _) in &pivot {
            col_count[*c as usize] -= 1;
        }
        let pivot_val = pivot
            .iter()
            .find(|(c, _)| *c == pc)
            .map(|(_, v)| v.clone())
            .unwrap();

        for ri in 0..rows.len() {
            if !active[ri] {
                continue;
            }
            let Ok(pos) = rows[ri].binary_search_by_key(&pc, |(c, _)| *c) else {
                continue;
            };
            let coef = rows[ri][pos].1.clone();
            let new_row = elim.eliminate(pc, &pivot_val, &pivot, &coef, &rows[ri]);
            for (c, _) in &rows[ri] {
                col_count[*c as usize] -= 1;
            }
            for (c, _) in &new_row {
                col_count[*c as usize] += 1;
            }
            if new_row.is_empty() {
                active[ri] = false;
            }
            rows[ri] = new_row;
        }
    }
    rank
}
