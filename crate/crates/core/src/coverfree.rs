//! Prime fields and the polynomial set families used by the Linial-style
//! color reductions.
//!
//! The family `Poly(d, q)` has one set per polynomial `g` of degree at most
//! `d` over GF(q): `S_g = {(a, g(a)) : a in GF(q)}`, encoded as `a * q + g(a)`
//! in the ground set `0..q²`. Two distinct polynomials agree on at most `d`
//! points, so a set meets any other set in at most `d` elements.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Unsigned machine words the field arithmetic can run on.
pub trait Word:
    PrimInt + Unsigned + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

impl<T> Word for T where
    T: PrimInt + Unsigned + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial degree must be at least 1")]
    ZeroDegree,
    #[error("q = {q}, d = {d}: family size q^(d+1) does not fit the word type")]
    TooLarge { q: u64, d: u32 },
    #[error("set index {index} out of range for a family of {len} sets")]
    IndexOutOfRange { index: u64, len: u64 },
    #[error("set {0} appears among the covering sets")]
    SelfCover(u64),
    #[error("exhaustive check needs {required} tuples, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("need {delta} distinct other sets but the family has only {len} sets")]
    NotEnoughSets { delta: usize, len: u64 },
}

fn to_u64<T: Word>(x: T) -> u64 {
    x.to_u64().expect("word fits u64")
}

fn from_u64<T: Word>(x: u64) -> T {
    T::from_u64(x).expect("value fits word")
}

/// Trial division.
pub fn is_prime<T: Word>(x: T) -> bool {
    let two = T::one() + T::one();
    if x < two {
        return false;
    }
    let mut p = two;
    while p <= x / p {
        if x % p == T::zero() {
            return false;
        }
        p = p + T::one();
    }
    true
}

/// Least prime `>= x`. Panics if the word type overflows first.
pub fn smallest_prime_geq<T: Word>(x: T) -> T {
    let mut p = x.max(T::one() + T::one());
    while !is_prime(p) {
        p = p.checked_add(&T::one()).expect("no prime below the word limit");
    }
    p
}

/// GF(q) for prime `q` with `q²` representable in `T`, so products never
/// overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField<T: Word> {
    q: T,
}

impl<T: Word> PrimeField<T> {
    pub fn new(q: T) -> Result<Self, FieldError> {
        if !is_prime(q) {
            return Err(FieldError::NotPrime(q.to_u64().unwrap_or(u64::MAX)));
        }
        if q.checked_mul(&q).is_none() {
            return Err(FieldError::TooLarge { q: to_u64(q), d: 1 });
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> T {
        self.q
    }

    pub fn reduce(&self, a: T) -> T {
        a % self.q
    }

    pub fn add(&self, a: T, b: T) -> T {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn neg(&self, a: T) -> T {
        if a == T::zero() {
            a
        } else {
            self.q - a
        }
    }

    pub fn sub(&self, a: T, b: T) -> T {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: T, b: T) -> T {
        a * b % self.q
    }

    pub fn pow(&self, mut base: T, mut exp: u64) -> T {
        let mut acc = T::one() % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: T) -> Option<T> {
        if a == T::zero() {
            None
        } else {
            Some(self.pow(a, to_u64(self.q) - 2))
        }
    }
}

/// `Poly(d, q)`: all polynomials of degree at most `d` over GF(q).
///
/// Set `i` is the polynomial whose coefficients are the base-`q` digits of
/// `i`, constant term least significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyFamily<T: Word> {
    field: PrimeField<T>,
    degree: u32,
    len: T,
}

impl<T: Word> PolyFamily<T> {
    pub fn new(degree: u32, q: T) -> Result<Self, FieldError> {
        if degree == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let field = PrimeField::new(q)?;
        let mut len = T::one();
        for _ in 0..=degree {
            len = len
                .checked_mul(&q)
                .ok_or(FieldError::TooLarge { q: to_u64(q), d: degree })?;
        }
        Ok(PolyFamily { field, degree, len })
    }

    pub fn field(&self) -> &PrimeField<T> {
        &self.field
    }

    pub fn q(&self) -> T {
        self.field.order()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of sets, `q^(d+1)`.
    pub fn len(&self) -> T {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Ground set size `q²`.
    pub fn ground_size(&self) -> T {
        self.q() * self.q()
    }

    /// Largest `Δ` for which no set is `(rho+1)`-covered by `Δ` others:
    /// `⌈q(rho+1)/d⌉ - 1`.
    pub fn cover_free_degree(&self, rho: u64) -> u64 {
        let need = to_u64(self.q()) * (rho + 1);
        need.div_ceil(self.degree as u64) - 1
    }

    fn check(&self, index: T) -> Result<(), FieldError> {
        if index >= self.len {
            return Err(FieldError::IndexOutOfRange { index: to_u64(index), len: to_u64(self.len) });
        }
        Ok(())
    }

    pub fn coefficients(&self, index: T) -> Result<Vec<T>, FieldError> {
        self.check(index)?;
        let q = self.q();
        let mut rest = index;
        Ok((0..=self.degree)
            .map(|_| {
                let c = rest % q;
                rest = rest / q;
                c
            })
            .collect())
    }

    fn eval_coeffs(&self, coeffs: &[T], a: T) -> T {
        coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| self.field.add(self.field.mul(acc, a), c))
    }

    /// `g_index(a)`.
    pub fn eval(&self, index: T, a: T) -> Result<T, FieldError> {
        Ok(self.eval_coeffs(&self.coefficients(index)?, self.field.reduce(a)))
    }

    /// Values `g_index(0), ..., g_index(q-1)`.
    pub fn evaluations(&self, index: T) -> Result<Vec<T>, FieldError> {
        let coeffs = self.coefficients(index)?;
        Ok(abscissas(self.q()).map(|a| self.eval_coeffs(&coeffs, a)).collect())
    }

    /// Encoded elements of `S_index` in increasing order.
    pub fn set(&self, index: T) -> Result<Vec<T>, FieldError> {
        let q = self.q();
        Ok(self
            .evaluations(index)?
            .into_iter()
            .zip(abscissas(q))
            .map(|(b, a)| a * q + b)
            .collect())
    }

    pub fn contains(&self, index: T, element: T) -> Result<bool, FieldError> {
        let q = self.q();
        if element >= self.ground_size() {
            return Ok(false);
        }
        Ok(self.eval(index, element / q)? == element % q)
    }
}

fn abscissas<T: Word>(q: T) -> impl Iterator<Item = T> {
    (0..to_u64(q)).map(from_u64)
}

/// Elements of `S_s0` contained in at most `rho` of the sets `others`,
/// counted with multiplicity. With `rho = 0` these are the elements not
/// covered by any other set.
pub fn residual_elements<T: Word>(
    fam: &PolyFamily<T>,
    s0: T,
    others: &[T],
    rho: usize,
) -> Result<Vec<T>, FieldError> {
    let own = fam.evaluations(s0)?;
    let mut hits = vec![0usize; own.len()];
    for &j in others {
        if j == s0 {
            return Err(FieldError::SelfCover(to_u64(s0)));
        }
        for (h, (mine, theirs)) in hits.iter_mut().zip(own.iter().zip(fam.evaluations(j)?)) {
            *h += (*mine == theirs) as usize;
        }
    }
    let q = fam.q();
    Ok(abscissas(q)
        .zip(own)
        .zip(hits)
        .filter(|&(_, h)| h <= rho)
        .map(|((a, b), _)| a * q + b)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every `s0` against every `delta`-subset of the other sets, refused when
    /// the tuple count exceeds `budget`.
    Exhaustive { budget: u128 },
    /// Uniformly random `s0` and `delta` distinct other sets.
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverFreeVerdict {
    pub holds: bool,
    pub tuples_tested: u64,
    /// First tuple `(s0, others)` found with `s0` `(rho+1)`-covered.
    pub counterexample: Option<(u64, Vec<u64>)>,
}

/// Checks that no set is `(rho+1)`-covered by `delta` other distinct sets,
/// i.e. every `S0` keeps an element contained in at most `rho` of them.
pub fn verify_cover_free<T: Word>(
    fam: &PolyFamily<T>,
    delta: usize,
    rho: usize,
    mode: CheckMode,
) -> Result<CoverFreeVerdict, FieldError> {
    let n = to_u64(fam.len());
    if (delta as u64) >= n {
        return Err(FieldError::NotEnoughSets { delta, len: n });
    }
    let q = to_u64(fam.q()) as usize;
    // evals[i * q + a] = g_i(a)
    let evals: Vec<u64> = (0..n)
        .flat_map(|i| fam.evaluations(from_u64(i)).expect("index in range"))
        .map(to_u64)
        .collect();
    let covered = |s0: u64, others: &[u64]| {
        let own = &evals[s0 as usize * q..][..q];
        (0..q).all(|a| {
            others.iter().filter(|&&j| evals[j as usize * q + a] == own[a]).count() > rho
        })
    };

    let mut tested = 0u64;
    match mode {
        CheckMode::Exhaustive { budget } => {
            let required = binomial(n - 1, delta as u64).saturating_mul(n as u128);
            if required > budget {
                return Err(FieldError::BudgetExceeded { required, budget });
            }
            let mut others = vec![0u64; delta];
            for s0 in 0..n {
                let pool: Vec<u64> = (0..n).filter(|&j| j != s0).collect();
                let mut idx: Vec<usize> = (0..delta).collect();
                loop {
                    for (o, &i) in others.iter_mut().zip(&idx) {
                        *o = pool[i];
                    }
                    tested += 1;
                    if covered(s0, &others) {
                        return Ok(CoverFreeVerdict {
                            holds: false,
                            tuples_tested: tested,
                            counterexample: Some((s0, others)),
                        });
                    }
                    if !next_combination(&mut idx, pool.len()) {
                        break;
                    }
                }
            }
        }
        CheckMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let s0 = rng.gen_range(0..n);
                // pick among the n-1 other indices, skipping s0
                let others: Vec<u64> = index::sample(&mut rng, (n - 1) as usize, delta)
                    .into_iter()
                    .map(|i| {
                        let i = i as u64;
                        if i >= s0 {
                            i + 1
                        } else {
                            i
                        }
                    })
                    .collect();
                tested += 1;
                if covered(s0, &others) {
                    return Ok(CoverFreeVerdict {
                        holds: false,
                        tuples_tested: tested,
                        counterexample: Some((s0, others)),
                    });
                }
            }
        }
    }
    Ok(CoverFreeVerdict { holds: true, tuples_tested: tested, counterexample: None })
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Advances `idx` (strictly increasing, values below `n`) to the next
/// combination in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn smallest_primes() {
        assert_eq!(smallest_prime_geq(6u64), 7);
        assert_eq!(smallest_prime_geq(1u64), 2);
        assert_eq!(smallest_prime_geq(13u32), 13);
        assert_eq!(smallest_prime_geq(90u16), 97);
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 2000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (x, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(x as u64), p, "{x}");
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(9u64), Err(FieldError::NotPrime(9)));
        assert_eq!(PolyFamily::new(2, 4u64), Err(FieldError::NotPrime(4)));
        assert_eq!(PolyFamily::new(0, 5u64), Err(FieldError::ZeroDegree));
        assert!(matches!(PolyFamily::new(2, 251u16), Err(FieldError::TooLarge { .. })));
    }

    #[test]
    fn field_axioms_gf7() {
        let f = PrimeField::new(7u32).unwrap();
        for a in 0..7 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..7 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
                assert_eq!(f.sub(a, b), (a + 7 - b) % 7);
                for c in 0..7 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn quadratic_family_over_gf3() {
        let fam = PolyFamily::new(2, 3u64).unwrap();
        assert_eq!(fam.len(), 27);
        assert_eq!(fam.ground_size(), 9);
        for i in 0..27 {
            assert_eq!(fam.set(i).unwrap().len(), 3);
        }
        // zero polynomial: (0,0), (1,0), (2,0)
        assert_eq!(fam.set(0).unwrap(), vec![0, 3, 6]);
        // index 5 = 2 + 1*3: g(x) = 2 + x
        assert_eq!(fam.coefficients(5).unwrap(), vec![2, 1, 0]);
        assert_eq!(fam.set(5).unwrap(), vec![2, 3, 7]);
        assert!(fam.contains(5, 7).unwrap());
        assert!(!fam.contains(5, 8).unwrap());
    }

    #[test]
    fn lines_over_gf5_meet_in_at_most_one_point() {
        let fam = PolyFamily::new(1, 5u64).unwrap();
        let sets: Vec<Vec<u64>> = (0..25).map(|i| fam.set(i).unwrap()).collect();
        for i in 0..25 {
            for j in 0..25 {
                let common = sets[i].iter().filter(|x| sets[j].contains(x)).count();
                if i == j {
                    assert_eq!(common, 5);
                } else {
                    assert!(common <= 1, "{i} {j}");
                }
            }
        }
    }

    #[test]
    fn pairwise_intersections_bounded_by_degree() {
        for (d, q) in [(1u32, 2u64), (1, 3), (2, 2), (2, 3), (2, 5), (1, 5)] {
            let fam = PolyFamily::new(d, q).unwrap();
            let n = fam.len();
            let sets: Vec<Vec<u64>> = (0..n).map(|i| fam.set(i).unwrap()).collect();
            for i in 0..n as usize {
                for j in i + 1..n as usize {
                    let common = sets[i].iter().filter(|x| sets[j].binary_search(x).is_ok()).count();
                    assert!(common <= d as usize);
                }
            }
        }
    }

    #[test]
    fn residual_with_no_others_is_whole_set() {
        let fam = PolyFamily::new(2, 7u64).unwrap();
        assert_eq!(residual_elements(&fam, 100, &[], 0).unwrap(), fam.set(100).unwrap());
        assert_eq!(residual_elements(&fam, 3, &[3], 0), Err(FieldError::SelfCover(3)));
        assert!(matches!(
            residual_elements(&fam, 343, &[], 0),
            Err(FieldError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn exhaustive_lines_gf5_delta4() {
        let fam = PolyFamily::new(1, 5u64).unwrap();
        assert_eq!(fam.cover_free_degree(0), 4);
        let v = verify_cover_free(&fam, 4, 0, CheckMode::Exhaustive { budget: 10_000_000 }).unwrap();
        assert!(v.holds);
        assert_eq!(v.tuples_tested as u128, binomial(24, 4) * 25);
    }

    #[test]
    fn exhaustive_refuses_over_budget() {
        let fam = PolyFamily::new(2, 5u64).unwrap();
        let err = verify_cover_free(&fam, 3, 0, CheckMode::Exhaustive { budget: 1000 }).unwrap_err();
        assert!(matches!(err, FieldError::BudgetExceeded { .. }));
    }

    #[test]
    fn sampled_quadratics_gf5_delta2() {
        let fam = PolyFamily::new(2, 5u64).unwrap();
        let v = verify_cover_free(&fam, 2, 0, CheckMode::Sampled { trials: 100_000, seed: 1 }).unwrap();
        assert!(v.holds);
        assert_eq!(v.tuples_tested, 100_000);
    }

    #[test]
    fn q_lines_can_cover_a_line() {
        let fam = PolyFamily::new(1, 5u64).unwrap();
        let v = verify_cover_free(&fam, 5, 0, CheckMode::Sampled { trials: 100_000, seed: 2 }).unwrap();
        assert!(!v.holds);
        let (s0, others) = v.counterexample.unwrap();
        // independent recount: every point of S0 lies on one of the others
        let own = fam.set(s0).unwrap();
        for x in own {
            assert!(others.iter().any(|&j| fam.contains(j, x).unwrap()));
        }
    }

    #[test]
    fn quadratic_residual_lower_bound_gf7() {
        let fam = PolyFamily::new(2, 7u64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            let s0 = rng.gen_range(0..343u64);
            let mut others = Vec::new();
            while others.len() < 2 {
                let j = rng.gen_range(0..343u64);
                if j != s0 && !others.contains(&j) {
                    others.push(j);
                }
            }
            assert!(residual_elements(&fam, s0, &others, 0).unwrap().len() >= 3);
        }
    }

    #[test]
    fn rho_one_residual_nonempty_gf5() {
        let fam = PolyFamily::new(2, 5u64).unwrap();
        assert_eq!(fam.cover_free_degree(1), 4);
        let v = verify_cover_free(&fam, 4, 1, CheckMode::Sampled { trials: 20_000, seed: 4 }).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn generic_over_word_width() {
        let a = PolyFamily::new(2, 11u16).unwrap();
        let b = PolyFamily::new(2, 11u64).unwrap();
        for i in (0..1331u16).step_by(37) {
            let sa: Vec<u64> = a.set(i).unwrap().into_iter().map(u64::from).collect();
            assert_eq!(sa, b.set(i as u64).unwrap());
        }
    }

    fn naive_residual(fam: &PolyFamily<u64>, s0: u64, others: &[u64], rho: usize) -> Vec<u64> {
        let sets: Vec<Vec<u64>> = others.iter().map(|&j| fam.set(j).unwrap()).collect();
        fam.set(s0)
            .unwrap()
            .into_iter()
            .filter(|x| sets.iter().filter(|s| s.contains(x)).count() <= rho)
            .collect()
    }

    proptest! {
        #[test]
        fn residual_matches_naive_recount(
            d in 1u32..4,
            qi in 0usize..4,
            s0 in any::<u64>(),
            raw in proptest::collection::vec(any::<u64>(), 0..12),
            rho in 0usize..3,
        ) {
            let q = [2u64, 3, 5, 7][qi];
            let fam = PolyFamily::new(d, q).unwrap();
            let n = fam.len();
            let s0 = s0 % n;
            let others: Vec<u64> = raw.into_iter().map(|x| x % n).filter(|&x| x != s0).collect();
            let fast = residual_elements(&fam, s0, &others, rho).unwrap();
            prop_assert_eq!(&fast, &naive_residual(&fam, s0, &others, rho));
            // quantitative bound: at most d*|others|/(rho+1) elements are over-covered
            let removed = q as usize - fast.len();
            prop_assert!(removed * (rho + 1) <= d as usize * others.len());
        }

        #[test]
        fn quadratic_q_at_least_3delta_leaves_delta(
            delta in 1u64..6, s0 in any::<u64>(), raw in proptest::collection::vec(any::<u64>(), 6),
        ) {
            let q = smallest_prime_geq(3 * delta);
            let fam = PolyFamily::new(2, q).unwrap();
            let n = fam.len();
            let s0 = s0 % n;
            let others: Vec<u64> = raw.into_iter()
                .map(|x| x % n)
                .filter(|&x| x != s0)
                .take(delta as usize)
                .collect();
            prop_assert!(residual_elements(&fam, s0, &others, 0).unwrap().len() as u64 >= delta);
        }

        #[test]
        fn next_combination_counts(n in 0usize..9, k in 0usize..5) {
            prop_assume!(k <= n);
            let mut idx: Vec<usize> = (0..k).collect();
            let mut count = 1u128;
            while next_combination(&mut idx, n) {
                count += 1;
            }
            prop_assert_eq!(count, binomial(n as u64, k as u64));
        }
    }
}
