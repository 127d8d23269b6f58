//! The order `f <= g` (`g = f + a` with `a = h then h†`) and contractions.
//!
//! Every witness `h` returned here satisfies `g = f + h.then(&h.dagger())`.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::integer;
use crate::linalg::search::DEFAULT_BUDGET;
use crate::matrix::Matrix;
use crate::rig::{Bool, ComplexSubfield, DaggerRig, Dual, Enumerable, Gf2};
use crate::verdict::{Certificate, Verdict};

fn not_positive(detail: impl Into<String>) -> Certificate {
    Certificate::NotPositive {
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------------------
// Sums of four squares

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn mod_pow(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    base.modpow(exp, m)
}

/// Miller-Rabin with the first twelve prime bases; exact below 3.3e24 and
/// only ever used for candidates whose decomposition is verified afterwards.
fn probably_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let n1 = n - 1u32;
    let mut d = n1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for a in BASES {
        let mut x = mod_pow(&BigInt::from(a), &d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// `c² + d² = p` for a prime `p ≡ 1 (mod 4)`, by the Hermite-Serret descent.
fn two_squares_prime(p: &BigInt) -> Option<(BigInt, BigInt)> {
    let exp = (p - 1u32) / 4u32;
    let minus_one = p - 1u32;
    let mut t = None;
    for c in 2u32..200 {
        let cand = mod_pow(&BigInt::from(c), &exp, p);
        if (&cand * &cand) % p == minus_one {
            t = Some(cand);
            break;
        }
    }
    let (mut a, mut b) = (p.clone(), t?);
    while &b * &b > *p {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let rest = p - &b * &b;
    let d = is_square(&rest)?;
    Some((b, d))
}

fn four_squares_small(n: u64) -> [u64; 4] {
    let isqrt = |x: u64| x.sqrt();
    let mut a = isqrt(n);
    loop {
        let r1 = n - a * a;
        let mut b = isqrt(r1).min(a);
        loop {
            let r2 = r1 - b * b;
            let mut c = isqrt(r2).min(b);
            loop {
                let r3 = r2 - c * c;
                let d = isqrt(r3);
                if d * d == r3 && d <= c {
                    return [a, b, c, d];
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        a -= 1;
    }
}

/// Four integers whose squares sum to `n >= 0`.
pub fn four_squares(n: &BigInt) -> [BigInt; 4] {
    assert!(!n.is_negative(), "four_squares of a negative number");
    let mut m = n.clone();
    let mut scale = BigInt::one();
    let four = BigInt::from(4);
    while !m.is_zero() && m.is_multiple_of(&four) {
        m /= 4u32;
        scale *= 2u32;
    }
    let out = if let Some(small) = m.to_u64().filter(|&s| s < 1 << 20) {
        four_squares_small(small).map(BigInt::from)
    } else {
        four_squares_large(&m)
    };
    let out = out.map(|x| x * &scale);
    debug_assert_eq!(out.iter().map(|x| x * x).sum::<BigInt>(), *n);
    out
}

fn four_squares_large(m: &BigInt) -> [BigInt; 4] {
    let mut a = m.sqrt();
    loop {
        let mut b = BigInt::zero();
        for _ in 0..64 {
            let r = m - &a * &a - &b * &b;
            if r.is_negative() {
                break;
            }
            if let Some(c) = is_square(&r) {
                return [a, b, c, BigInt::zero()];
            }
            if (&r % 4u32) == BigInt::one() && probably_prime(&r) {
                if let Some((c, d)) = two_squares_prime(&r) {
                    if &c * &c + &d * &d == r {
                        return [a, b, c, d];
                    }
                }
            }
            b += 1u32;
        }
        a -= 1u32;
    }
}

/// Four rationals whose squares sum to `q >= 0`.
pub fn rational_four_squares(q: &BigRational) -> [BigRational; 4] {
    // p/d = p·d / d²
    let n = q.numer() * q.denom();
    let d = q.denom().clone();
    four_squares(&n).map(|x| BigRational::new(x, d.clone()))
}

// ---------------------------------------------------------------------------
// Dagger subfields of the complex numbers

/// `a = l · diag(d) · l†` (textbook products) for a positive semidefinite
/// self-adjoint `a`, with `l` unit lower triangular, or the reason `a` is not
/// positive.
pub fn ldl<F: ComplexSubfield>(a: &Matrix<F>) -> Result<(Matrix<F>, Vec<BigRational>), String> {
    if !a.is_square() {
        return Err("not square".into());
    }
    if !a.is_self_adjoint() {
        return Err("not self-adjoint".into());
    }
    let n = a.rows();
    let mut s = a.to_rows();
    let mut l = Matrix::<F>::identity(n);
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let d = s[k][k]
            .as_rational()
            .ok_or_else(|| format!("pivot {k} is not real"))?;
        if d.is_negative() {
            return Err(format!("pivot {k} is {d}"));
        }
        if d.is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !s[i][k].is_zero()) {
                return Err(format!(
                    "pivot {k} vanishes but entry ({i},{k}) of its Schur complement is {}",
                    s[i][k]
                ));
            }
            pivots.push(d);
            continue;
        }
        let dinv = F::from_rational(&d.recip());
        for i in k + 1..n {
            l.set(i, k, s[i][k].times(&dinv));
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let delta = s[i][k].times(&dinv).times(&s[k][j]);
                s[i][j] = s[i][j].minus(&delta);
            }
        }
        pivots.push(d);
    }
    Ok((l, pivots))
}

/// `h` with `h then h† = a` for a positive `a`: rows `q · (column k of l)†`
/// where the `q` are rational four-square roots of the pivots.
pub fn subfield_positive_witness<F: ComplexSubfield>(
    a: &Matrix<F>,
) -> Result<Matrix<F>, String> {
    let (l, pivots) = ldl(a)?;
    let n = a.rows();
    let mut rows = Vec::new();
    for (k, d) in pivots.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        for q in rational_four_squares(d) {
            if q.is_zero() {
                continue;
            }
            let q = F::from_rational(&q);
            rows.push((0..n).map(|i| q.times(&l.get(i, k).dagger())).collect());
        }
    }
    let h = if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows)
    };
    debug_assert_eq!(h.then(&h.dagger()), *a);
    Ok(h)
}

pub fn subfield_leq_positive<F: ComplexSubfield>(
    f: &Matrix<F>,
    g: &Matrix<F>,
) -> Verdict<Matrix<F>> {
    match subfield_positive_witness(&g.minus(f)) {
        Ok(h) => Verdict::Exists(h),
        Err(why) => Verdict::NotExists(not_positive(format!("g - f: {why}"))),
    }
}

// ---------------------------------------------------------------------------
// Integers

/// Enumerates integer matrices `h` with `h then h† = a`, calling `visit` on
/// each until it returns true. Returns `None` when the node budget runs out,
/// otherwise whether `visit` accepted one.
pub fn integer_gram_search(
    a: &Matrix<BigInt>,
    budget: &mut u64,
    visit: &mut dyn FnMut(&[Vec<BigInt>]) -> bool,
) -> Option<bool> {
    let mut rows = Vec::new();
    gram_dfs(a.to_rows(), &mut rows, budget, visit)
}

fn gram_dfs(
    residual: Vec<Vec<BigInt>>,
    rows: &mut Vec<Vec<BigInt>>,
    budget: &mut u64,
    visit: &mut dyn FnMut(&[Vec<BigInt>]) -> bool,
) -> Option<bool> {
    let n = residual.len();
    let Some(k) = (0..n).find(|&i| residual[i][i].is_positive()) else {
        let done = residual.iter().all(|r| r.iter().all(Zero::is_zero));
        return Some(done && visit(rows));
    };
    if (0..n).any(|i| residual[i][i].is_negative()) {
        return Some(false);
    }
    let bounds: Vec<i64> = (0..n)
        .map(|i| {
            if i < k {
                0
            } else {
                residual[i][i].sqrt().to_i64().unwrap_or(i64::MAX)
            }
        })
        .collect();
    let mut v: Vec<i64> = (0..n).map(|i| if i > k { -bounds[i] } else { 0 }).collect();
    v[k] = 1;
    loop {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let next: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &residual[i][j] - BigInt::from(v[i]) * BigInt::from(v[j]))
                    .collect()
            })
            .collect();
        let feasible = (0..n).all(|i| {
            !next[i][i].is_negative()
                && (0..n).all(|j| &next[i][j] * &next[i][j] <= &next[i][i] * &next[j][j])
        });
        if feasible {
            rows.push(v.iter().map(|&x| BigInt::from(x)).collect());
            if gram_dfs(next, rows, budget, visit)? {
                return Some(true);
            }
            rows.pop();
        }
        // Odometer over v[k] in 1..=b_k and v[i] in -b_i..=b_i for i > k.
        let mut pos = n;
        loop {
            if pos == k {
                return Some(false);
            }
            pos -= 1;
            let lo = if pos == k { 1 } else { -bounds[pos] };
            if v[pos] < bounds[pos] {
                v[pos] += 1;
                for (i, x) in v.iter_mut().enumerate().skip(pos + 1) {
                    *x = -bounds[i];
                }
                break;
            }
            v[pos] = lo;
        }
    }
}

fn rows_to_matrix(rows: &[Vec<BigInt>], n: usize) -> Matrix<BigInt> {
    if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows.to_vec())
    }
}

pub fn integer_leq_positive(f: &Matrix<BigInt>, g: &Matrix<BigInt>) -> Verdict<Matrix<BigInt>> {
    let a = g.minus(f);
    let lifted = a.map(|x| BigRational::from_integer(x.clone()));
    if let Err(why) = ldl(&lifted) {
        return Verdict::NotExists(not_positive(format!("g - f over the rationals: {why}")));
    }
    let mut budget = DEFAULT_BUDGET;
    let mut found = None;
    let n = a.rows();
    match integer_gram_search(&a, &mut budget, &mut |rows| {
        found = Some(rows_to_matrix(rows, n));
        true
    }) {
        Some(true) => Verdict::Exists(found.expect("visited")),
        Some(false) => Verdict::NotExists(Certificate::ExhaustedSearch {
            candidates: DEFAULT_BUDGET - budget,
        }),
        None => Verdict::Unknown("integer Gram search budget exhausted".into()),
    }
}

/// Integer contractions are the signed partial permutation matrices; the
/// witness consists of unit rows at the zero columns.
pub fn integer_is_contraction(f: &Matrix<BigInt>) -> Verdict<Matrix<BigInt>> {
    for r in 0..f.rows() {
        for c in 0..f.cols() {
            if f.get(r, c).abs() > BigInt::one() {
                return Verdict::NotExists(Certificate::Structural {
                    detail: format!("entry ({r},{c}) = {} has magnitude above 1", f.get(r, c)),
                });
            }
        }
    }
    for r in 0..f.rows() {
        if f.row(r).iter().filter(|x| !x.is_zero()).count() > 1 {
            return Verdict::NotExists(Certificate::Structural {
                detail: format!("row {r} has two nonzero entries"),
            });
        }
    }
    let mut witness = Vec::new();
    for c in 0..f.cols() {
        let nz = (0..f.rows()).filter(|&r| !f.get(r, c).is_zero()).count();
        if nz > 1 {
            return Verdict::NotExists(Certificate::Structural {
                detail: format!("column {c} has two nonzero entries"),
            });
        }
        if nz == 0 {
            witness.push((0..f.cols()).map(|j| BigInt::from(u8::from(j == c))).collect());
        }
    }
    Verdict::Exists(rows_to_matrix(&witness, f.cols()))
}

// ---------------------------------------------------------------------------
// Dual numbers

/// `h = h0 + h1 x` with `h0 then h0† = a0` and `h0†·h1 + h1†·h0 = a1`: each
/// integer decomposition of `a0` is tried, and the first-order equation is an
/// integer linear system in `h1`.
pub fn dual_leq_positive(f: &Matrix<Dual>, g: &Matrix<Dual>) -> Verdict<Matrix<Dual>> {
    let a = g.minus(f);
    if a != a.transpose() {
        return Verdict::NotExists(not_positive("g - f is not self-adjoint"));
    }
    let n = a.rows();
    let a0 = a.map(|d| d.a.clone());
    let a1 = a.map(|d| d.b.clone());
    let lifted = a0.map(|x| BigRational::from_integer(x.clone()));
    if let Err(why) = ldl(&lifted) {
        return Verdict::NotExists(not_positive(format!(
            "constant part over the rationals: {why}"
        )));
    }
    let mut budget = DEFAULT_BUDGET;
    let mut found = None;
    let outcome = integer_gram_search(&a0, &mut budget, &mut |rows| {
        let h0 = rows_to_matrix(rows, n);
        let k = h0.rows();
        // Unknown h1 (k x n) flattened row-major; one equation per i <= j.
        let mut eqs = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut row = vec![BigInt::zero(); k * n];
                for r in 0..k {
                    row[r * n + j] += h0.get(r, i);
                    row[r * n + i] += h0.get(r, j);
                }
                eqs.push(row);
                rhs.push(vec![a1.get(i, j).clone()]);
            }
        }
        if k * n == 0 {
            if a1.is_zero() {
                found = Some(h0.map(|x| Dual::new(x.clone(), 0)));
                return true;
            }
            return false;
        }
        let system = Matrix::from_rows(eqs);
        let rhs = Matrix::from_rows(rhs);
        match integer::solve(&system, &rhs) {
            Ok(x) => {
                found = Some(Matrix::from_fn(k, n, |r, c| {
                    Dual::new(h0.get(r, c).clone(), x.get(r * n + c, 0).clone())
                }));
                true
            }
            Err(_) => false,
        }
    });
    match outcome {
        Some(true) => Verdict::Exists(found.expect("visited")),
        Some(false) => Verdict::NotExists(Certificate::ExhaustedSearch {
            candidates: DEFAULT_BUDGET - budget,
        }),
        None => Verdict::Unknown("dual Gram search budget exhausted".into()),
    }
}

// ---------------------------------------------------------------------------
// GF(2) and Booleans

/// Over GF(2) a matrix is positive iff it is symmetric.
pub fn gf2_leq_positive(f: &Matrix<Gf2>, g: &Matrix<Gf2>) -> Verdict<Matrix<Gf2>> {
    let a = g.minus(f);
    if a != a.transpose() {
        return Verdict::NotExists(not_positive("g - f is not symmetric"));
    }
    let n = a.rows();
    let mut rows: Vec<Vec<Gf2>> = Vec::new();
    let mut diag: Vec<bool> = (0..n).map(|i| a.get(i, i).0).collect();
    for i in 0..n {
        for j in i + 1..n {
            if a.get(i, j).0 {
                rows.push((0..n).map(|t| Gf2(t == i || t == j)).collect());
                diag[i] ^= true;
                diag[j] ^= true;
            }
        }
    }
    for (i, &d) in diag.iter().enumerate() {
        if d {
            rows.push((0..n).map(|t| Gf2(t == i)).collect());
        }
    }
    let h = if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows)
    };
    debug_assert_eq!(h.then(&h.dagger()), a);
    Verdict::Exists(h)
}

/// Over the Booleans, `a` is positive iff it is symmetric and each 1 at
/// `(i, j)` has 1s at `(i, i)` and `(j, j)`. Then `f <= g` iff `f ⊆ g` and
/// `g ∖ f` lies inside the greatest positive matrix below `g`.
pub fn bool_leq_positive(f: &Matrix<Bool>, g: &Matrix<Bool>) -> Verdict<Matrix<Bool>> {
    let n = g.rows();
    let at = |m: &Matrix<Bool>, i: usize, j: usize| m.get(i, j).0;
    for i in 0..n {
        for j in 0..n {
            if at(f, i, j) && !at(g, i, j) {
                return Verdict::NotExists(not_positive(format!(
                    "f has a 1 at ({i},{j}) where g has 0"
                )));
            }
        }
    }
    let in_greatest =
        |i: usize, j: usize| at(g, i, j) && at(g, j, i) && at(g, i, i) && at(g, j, j);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if at(g, i, j) && !at(f, i, j) && !in_greatest(i, j) {
                return Verdict::NotExists(not_positive(format!(
                    "no positive matrix below g covers ({i},{j})"
                )));
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            if in_greatest(i, j) {
                rows.push((0..n).map(|t| Bool(t == i || t == j)).collect());
            }
        }
    }
    let h = if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows)
    };
    debug_assert_eq!(f.plus(&h.then(&h.dagger())), *g);
    Verdict::Exists(h)
}

// ---------------------------------------------------------------------------
// Bounded search for the remaining rigs

/// Searches `h` with up to `2n` rows of small entries such that
/// `f + h then h† = g`; exhaustion is reported as `Unknown`.
pub fn bounded_leq_positive<R: DaggerRig + Enumerable>(
    f: &Matrix<R>,
    g: &Matrix<R>,
) -> Verdict<Matrix<R>> {
    let n = g.rows();
    let degree = 4 + f.degree().max(g.degree());
    let cands = R::small_elements(degree);
    let mut budget = DEFAULT_BUDGET;
    for k in 0..=2 * n {
        let cells = k * n;
        let mut idx = vec![0usize; cells];
        loop {
            if budget == 0 {
                return Verdict::Unknown("positivity search budget exhausted".into());
            }
            budget -= 1;
            let h = Matrix::from_fn(k, n, |r, c| cands[idx[r * n + c]].clone());
            if f.plus(&h.then(&h.dagger())) == *g {
                return Verdict::Exists(h);
            }
            let mut pos = 0;
            while pos < cells {
                idx[pos] += 1;
                if idx[pos] < cands.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == cells {
                break;
            }
        }
    }
    Verdict::Unknown(format!(
        "no witness with at most {} rows of degree <= {degree}",
        2 * n
    ))
}
