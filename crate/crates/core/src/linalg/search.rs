//! Bounded backtracking over small candidate entries, for rigs without a
//! complete solver.

use crate::matrix::Matrix;
use crate::rig::Enumerable;
use crate::verdict::Verdict;

/// Default number of search nodes before a search gives up.
pub const DEFAULT_BUDGET: u64 = 200_000;

pub(crate) enum Search<T> {
    Found(T),
    Exhausted,
    OutOfBudget,
}

/// Finds `x` with `sum_j coeff(i, j, x_j) = target_i` for every `i`, each
/// `x_j` drawn from `cands`.
pub(crate) fn search_vector<R: Enumerable>(
    unknowns: usize,
    target: &[R],
    coeff: &dyn Fn(usize, usize, &R) -> R,
    cands: &[R],
    budget: &mut u64,
) -> Search<Vec<R>> {
    let mut partial: Vec<R> = vec![R::zero(); target.len()];
    let mut chosen = Vec::with_capacity(unknowns);
    match dfs(unknowns, target, coeff, cands, budget, &mut partial, &mut chosen) {
        Some(true) => Search::Found(chosen),
        Some(false) => Search::Exhausted,
        None => Search::OutOfBudget,
    }
}

fn dfs<R: Enumerable>(
    unknowns: usize,
    target: &[R],
    coeff: &dyn Fn(usize, usize, &R) -> R,
    cands: &[R],
    budget: &mut u64,
    partial: &mut Vec<R>,
    chosen: &mut Vec<R>,
) -> Option<bool> {
    let j = chosen.len();
    if j == unknowns {
        return Some(partial.iter().zip(target).all(|(a, b)| a == b));
    }
    for c in cands {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let saved = partial.clone();
        let mut ok = true;
        for (i, t) in target.iter().enumerate() {
            if !c.is_zero() {
                partial[i] = partial[i].plus(&coeff(i, j, c));
            }
            if !R::may_reach(&partial[i], t) {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(c.clone());
            if dfs(unknowns, target, coeff, cands, budget, partial, chosen)? {
                return Some(true);
            }
            chosen.pop();
        }
        *partial = saved;
    }
    Some(false)
}

fn candidates<R: Enumerable>(m: &Matrix<R>, b: &Matrix<R>) -> (Vec<R>, usize) {
    let degree = 4 + m.degree().max(b.degree());
    (R::small_elements(degree), degree)
}

/// Bounded search for `i` with `i then m = b`; never certifies absence.
pub fn bounded_solve_right<R: Enumerable>(m: &Matrix<R>, b: &Matrix<R>) -> Verdict<Matrix<R>> {
    let (cands, degree) = candidates(m, b);
    let mut budget = DEFAULT_BUDGET;
    let mut out = Matrix::zero(m.cols(), b.cols());
    for c in 0..b.cols() {
        let target: Vec<R> = (0..m.rows()).map(|i| b.get(i, c).clone()).collect();
        let coeff = |i: usize, j: usize, x: &R| m.get(i, j).times(x);
        match search_vector(m.cols(), &target, &coeff, &cands, &mut budget) {
            Search::Found(x) => {
                for (j, v) in x.into_iter().enumerate() {
                    out.set(j, c, v);
                }
            }
            Search::Exhausted => {
                return Verdict::Unknown(format!(
                    "no monomial solution of degree <= {degree} for column {c}"
                ))
            }
            Search::OutOfBudget => {
                return Verdict::Unknown(format!("search budget exhausted at column {c}"))
            }
        }
    }
    Verdict::Exists(out)
}

/// Bounded search for `k` with `m then k = b`; never certifies absence.
pub fn bounded_solve_left<R: Enumerable>(m: &Matrix<R>, b: &Matrix<R>) -> Verdict<Matrix<R>> {
    let (cands, degree) = candidates(m, b);
    let mut budget = DEFAULT_BUDGET;
    let mut out = Matrix::zero(b.rows(), m.rows());
    for z in 0..b.rows() {
        let target: Vec<R> = (0..m.cols()).map(|x| b.get(z, x).clone()).collect();
        let coeff = |x: usize, y: usize, k: &R| k.times(m.get(y, x));
        match search_vector(m.rows(), &target, &coeff, &cands, &mut budget) {
            Search::Found(k) => {
                for (y, v) in k.into_iter().enumerate() {
                    out.set(z, y, v);
                }
            }
            Search::Exhausted => {
                return Verdict::Unknown(format!(
                    "no monomial solution of degree <= {degree} for row {z}"
                ))
            }
            Search::OutOfBudget => {
                return Verdict::Unknown(format!("search budget exhausted at row {z}"))
            }
        }
    }
    Verdict::Exists(out)
}
