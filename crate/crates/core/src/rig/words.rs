//! Monoid rigs: finitely supported natural-number combinations of normal
//! words, with a rewriting system that may send a product to zero.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{DaggerRig, Enumerable, Rig, RigDescriptor};
use crate::verdict::{Certificate, Verdict};

/// Normal forms of a monoid with zero presented by generators and relations.
pub trait WordMonoid: Clone + fmt::Debug + Ord + Hash + Send + Sync + 'static {
    const DESCRIPTOR: RigDescriptor;

    fn identity() -> Self;

    /// Product of normal forms; `None` is the absorbing zero.
    fn mul(&self, other: &Self) -> Option<Self>;

    fn generator(name: &str, daggered: bool) -> Option<Self>;

    fn len(&self) -> usize;

    fn is_identity(&self) -> bool {
        self.len() == 0
    }

    /// All normal words of length at most `max_len`.
    fn words_up_to(max_len: usize) -> Vec<Self>;

    /// Space-separated factors such as `y^2 x`; empty for the identity.
    fn factors(&self) -> String;
}

/// Word monoids with an involution reversing products.
pub trait DaggerWord: WordMonoid {
    fn dagger(&self) -> Self;
}

/// Normal word `y^a x^b` of the monoid with zero `⟨x, y | xy = 0⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XyWord {
    pub y: u32,
    pub x: u32,
}

/// Normal word `x^j x†^i` of the monoid `⟨x, x† | x†x = 1⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoWord {
    pub x: u32,
    pub xd: u32,
}

fn power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

fn join(parts: [Option<String>; 2]) -> String {
    parts.into_iter().flatten().collect::<Vec<_>>().join(" ")
}

impl WordMonoid for XyWord {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "word-rig-xy",
        has_negatives: false,
        has_dagger: false,
        is_commutative: false,
        element_grammar: "words",
    };

    fn identity() -> Self {
        XyWord { y: 0, x: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        if self.x > 0 && other.y > 0 {
            return None;
        }
        Some(XyWord {
            y: self.y + other.y,
            x: self.x + other.x,
        })
    }

    fn generator(name: &str, daggered: bool) -> Option<Self> {
        match (name, daggered) {
            ("x", false) => Some(XyWord { y: 0, x: 1 }),
            ("y", false) => Some(XyWord { y: 1, x: 0 }),
            _ => None,
        }
    }

    fn len(&self) -> usize {
        (self.x + self.y) as usize
    }

    fn words_up_to(max_len: usize) -> Vec<Self> {
        let n = max_len as u32;
        let mut out = Vec::new();
        for total in 0..=n {
            for y in 0..=total {
                out.push(XyWord { y, x: total - y });
            }
        }
        out
    }

    fn factors(&self) -> String {
        join([power("y", self.y), power("x", self.x)])
    }
}

impl WordMonoid for IsoWord {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "free-isometry",
        has_negatives: false,
        has_dagger: true,
        is_commutative: false,
        element_grammar: "words",
    };

    fn identity() -> Self {
        IsoWord { x: 0, xd: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(if self.xd >= other.x {
            IsoWord {
                x: self.x,
                xd: self.xd - other.x + other.xd,
            }
        } else {
            IsoWord {
                x: self.x + other.x - self.xd,
                xd: other.xd,
            }
        })
    }

    fn generator(name: &str, daggered: bool) -> Option<Self> {
        match (name, daggered) {
            ("x", false) => Some(IsoWord { x: 1, xd: 0 }),
            ("x", true) => Some(IsoWord { x: 0, xd: 1 }),
            _ => None,
        }
    }

    fn len(&self) -> usize {
        (self.x + self.xd) as usize
    }

    fn words_up_to(max_len: usize) -> Vec<Self> {
        let n = max_len as u32;
        let mut out = Vec::new();
        for total in 0..=n {
            for x in 0..=total {
                out.push(IsoWord { x, xd: total - x });
            }
        }
        out
    }

    fn factors(&self) -> String {
        join([power("x", self.x), power("x!", self.xd)])
    }
}

impl DaggerWord for IsoWord {
    fn dagger(&self) -> Self {
        IsoWord {
            x: self.xd,
            xd: self.x,
        }
    }
}

/// A finite sum of normal words with positive natural coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordSum<W: WordMonoid> {
    terms: BTreeMap<W, BigUint>,
}

/// The rig `N[x, y]/⟨xy = 0⟩`.
pub type WordRigXY = WordSum<XyWord>;

/// The monoid rig of the free isometry `x†x = 1`.
pub type FreeIsometry = WordSum<IsoWord>;

impl<W: WordMonoid> WordSum<W> {
    pub fn monomial(word: W) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, BigUint::one());
        WordSum { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, &BigUint)> {
        self.terms.iter()
    }

    /// Every coefficient is at most the matching coefficient of `other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.terms
            .iter()
            .all(|(w, c)| other.terms.get(w).is_some_and(|d| c <= d))
    }

    fn add_term(&mut self, word: W, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(word).or_insert_with(BigUint::zero) += coeff;
    }
}

impl<W: WordMonoid> Zero for WordSum<W> {
    fn zero() -> Self {
        WordSum {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<W: WordMonoid> One for WordSum<W> {
    fn one() -> Self {
        WordSum::monomial(W::identity())
    }
}

impl<W: WordMonoid> Add for WordSum<W> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl<W: WordMonoid> Mul for WordSum<W> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl<W: WordMonoid> Rig for WordSum<W> {
    const DESCRIPTOR: RigDescriptor = W::DESCRIPTOR;

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = WordSum::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if let Some(w) = u.mul(v) {
                    out.add_term(w, a * b);
                }
            }
        }
        out
    }

    fn negate(&self) -> Verdict<Self> {
        if self.is_zero() {
            Verdict::Exists(self.clone())
        } else {
            Verdict::NotExists(Certificate::NoNegative {
                element: self.to_string(),
            })
        }
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        if n.is_negative() {
            return Err(format!("{n} is not a natural number"));
        }
        let mut out = WordSum::zero();
        out.add_term(W::identity(), n.magnitude().clone());
        Ok(out)
    }

    fn generator(name: &str, daggered: bool) -> Option<Self> {
        W::generator(name, daggered).map(WordSum::monomial)
    }

    fn degree(&self) -> usize {
        self.terms.keys().map(W::len).max().unwrap_or(0)
    }
}

impl<W: DaggerWord> DaggerRig for WordSum<W> {
    fn dagger(&self) -> Self {
        let mut out = WordSum::zero();
        for (w, c) in &self.terms {
            out.add_term(w.dagger(), c.clone());
        }
        out
    }
}

impl<W: WordMonoid> Enumerable for WordSum<W> {
    fn small_elements(degree: usize) -> Vec<Self> {
        let mut out = vec![WordSum::zero()];
        out.extend(W::words_up_to(degree).into_iter().map(WordSum::monomial));
        out
    }

    fn may_reach(partial: &Self, target: &Self) -> bool {
        partial.dominated_by(target)
    }
}

impl<W: WordMonoid> fmt::Display for WordSum<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let factors = w.factors();
            match (c.is_one(), factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => f.write_str(&factors)?,
                (false, false) => write!(f, "{c} {factors}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use proptest::prelude::*;

    use super::*;

    fn iso(x: u32, xd: u32) -> FreeIsometry {
        WordSum::monomial(IsoWord { x, xd })
    }

    #[test]
    fn relations() {
        let x = FreeIsometry::parse("x").unwrap();
        let xd = FreeIsometry::parse("x!").unwrap();
        assert_eq!(xd.times(&x), FreeIsometry::one());
        assert_ne!(x.times(&xd), FreeIsometry::one());
        let x = WordRigXY::parse("x").unwrap();
        let y = WordRigXY::parse("y").unwrap();
        assert!(x.times(&y).is_zero());
        assert!(!y.times(&x).is_zero());
        assert!(WordRigXY::parse("x!").is_err());
    }

    #[test]
    fn display_round_trip() {
        let e = iso(2, 3).plus(&iso(2, 3)).plus(&iso(1, 0)).plus(&FreeIsometry::one());
        assert_eq!(e.to_string(), "2 x^2 x!^3 + x + 1");
        assert_eq!(FreeIsometry::parse(&e.to_string()).unwrap(), e);
        let w = WordRigXY::parse("3 y^2 x + y").unwrap();
        assert_eq!(WordRigXY::parse(&w.to_string()).unwrap(), w);
    }

    /// Normal forms reachable from a letter string by rewriting `x†x → 1`
    /// at any position, explored exhaustively.
    fn rewrite_normal_forms(word: &[bool]) -> HashSet<Vec<bool>> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([word.to_vec()]);
        let mut normal = HashSet::new();
        while let Some(w) = queue.pop_front() {
            if !seen.insert(w.clone()) {
                continue;
            }
            let mut reducible = false;
            for k in 0..w.len().saturating_sub(1) {
                // true = x†, false = x
                if w[k] && !w[k + 1] {
                    reducible = true;
                    let mut next = w[..k].to_vec();
                    next.extend_from_slice(&w[k + 2..]);
                    queue.push_back(next);
                }
            }
            if !reducible {
                normal.insert(w);
            }
        }
        normal
    }

    #[test]
    fn free_isometry_confluence() {
        for len in 0..=8u32 {
            for bits in 0..(1u32 << len) {
                let word: Vec<bool> = (0..len).map(|k| bits >> k & 1 == 1).collect();
                let forms = rewrite_normal_forms(&word);
                assert_eq!(forms.len(), 1, "{word:?}");
                let nf = forms.into_iter().next().unwrap();
                let x = nf.iter().filter(|b| !**b).count() as u32;
                let xd = nf.len() as u32 - x;
                assert!(nf.iter().skip_while(|b| !**b).all(|b| *b));
                let product = word.iter().fold(FreeIsometry::one(), |acc, &d| {
                    acc.times(&if d { iso(0, 1) } else { iso(1, 0) })
                });
                assert_eq!(product, iso(x, xd));
            }
        }
    }

    fn arb_sum<W: WordMonoid>() -> impl Strategy<Value = WordSum<W>> {
        proptest::collection::vec((0usize..10, 1u32..3), 0..3).prop_map(|ts| {
            let words = W::words_up_to(3);
            let mut out = WordSum::zero();
            for (k, c) in ts {
                out.add_term(words[k].clone(), BigUint::from(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn iso_dagger_reverses(a in arb_sum::<IsoWord>(), b in arb_sum::<IsoWord>()) {
            prop_assert_eq!(a.times(&b).dagger(), b.dagger().times(&a.dagger()));
            prop_assert_eq!(a.dagger().dagger(), a);
        }

        #[test]
        fn iso_associative(a in arb_sum::<IsoWord>(), b in arb_sum::<IsoWord>(), c in arb_sum::<IsoWord>()) {
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        }

        #[test]
        fn xy_associative(a in arb_sum::<XyWord>(), b in arb_sum::<XyWord>(), c in arb_sum::<XyWord>()) {
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(b.plus(&c).times(&a), b.times(&a).plus(&c.times(&a)));
        }
    }
}
