//! Exact-rational symmetric-group character machinery.
//!
//! Everything here is exact: character values by the recursive hook-removal
//! rule, canonical and shifted projections of irreducible characters,
//! horizontal-2-strip path counts feeding the averaged half-step projection,
//! the character decomposition of the uniform measure on full cycles, and
//! the convergence coefficients a_q(l) computed by two independent routes.
//! A brute-force group-algebra oracle (fiber sums over S_N, N ≤ 8) checks
//! the projection formulas.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CoreError, Result};
use crate::partition::{
    partitions, remove_skew_hooks, two_strip_path_counts, Partition, SkewShape,
};
use crate::perm::Permutation;

pub type Rational = BigRational;

pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n as u64 {
        f *= i;
    }
    f
}

/// Canonical wire format for exact rationals: "num/den" with positive
/// denominator, e.g. "-1/2", "1/1".
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| CoreError::InvalidInput(format!("expected num/den, got {s:?}")))?;
    let num: BigInt = num
        .parse()
        .map_err(|e| CoreError::InvalidInput(format!("bad numerator {num:?}: {e}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|e| CoreError::InvalidInput(format!("bad denominator {den:?}: {e}")))?;
    if den.is_zero() {
        return Err(CoreError::InvalidInput("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

/// Irreducible character value χ_λ on the class of `cycle_type`, by the
/// recursive signed hook-removal rule.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if lambda.size() != cycle_type.size() {
        return Err(CoreError::InvalidInput(format!(
            "shape {lambda} and cycle type {cycle_type} have different sizes"
        )));
    }
    let mut memo: HashMap<(Vec<u32>, usize), BigInt> = HashMap::new();
    fn eval(
        shape: &Partition,
        idx: usize,
        parts: &[u32],
        memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
    ) -> BigInt {
        if idx == parts.len() {
            return BigInt::one();
        }
        let key = (shape.rows().to_vec(), idx);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (mu, height) in remove_skew_hooks(shape, parts[idx]) {
            let sub = eval(&mu, idx + 1, parts, memo);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo.insert(key, total.clone());
        total
    }
    Ok(eval(lambda, 0, cycle_type.rows(), &mut memo))
}

/// χ_λ on every conjugacy class of S_{|λ|}.
pub fn character_table(lambda: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for class in partitions(lambda.size()) {
        let v = mn_character(lambda, &class)?;
        out.insert(class, v);
    }
    Ok(out)
}

/// dim λ = χ_λ(1^n).
pub fn dimension(lambda: &Partition) -> Result<BigInt> {
    let ones = Partition::new(vec![1; lambda.size() as usize])?;
    mn_character(lambda, &ones)
}

/// |class of cycle type ν in S_n| = n! / Π kᵐ·m!.
pub fn conjugacy_class_size(n: u32, cycle_type: &Partition) -> Result<BigInt> {
    if cycle_type.size() != n {
        return Err(CoreError::InvalidInput(format!(
            "cycle type {cycle_type} is not a partition of {n}"
        )));
    }
    let mut z = BigInt::one();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &k in cycle_type.rows() {
        *mult.entry(k).or_insert(0) += 1;
    }
    for (k, m) in mult {
        z *= BigInt::from(k).pow(m) * factorial(m);
    }
    Ok(factorial(n) / z)
}

/// Exact-rational linear combination of irreducible characters of S_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    degree: u32,
    coeffs: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = Self::zero(degree);
        for (shape, coeff) in terms {
            out.add_term(shape, coeff)?;
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Nonzero coefficients in the irreducible-character basis.
    pub fn coefficients(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, shape: &Partition) -> Rational {
        self.coeffs.get(shape).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, shape: Partition, coeff: Rational) -> Result<()> {
        if shape.size() != self.degree {
            return Err(CoreError::InvalidInput(format!(
                "shape {shape} does not index a character of S_{}",
                self.degree
            )));
        }
        let entry = self.coeffs.entry(shape.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&shape);
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.degree != other.degree {
            return Err(CoreError::InvalidInput(
                "cannot add class functions of different degrees".into(),
            ));
        }
        let mut out = self.clone();
        for (shape, coeff) in &other.coeffs {
            out.add_term(shape.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> ClassFunction {
        if factor.is_zero() {
            return ClassFunction::zero(self.degree);
        }
        ClassFunction {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (s.clone(), c * factor))
                .collect(),
        }
    }

    /// Pointwise value on the class of `cycle_type`: Σ a_λ χ_λ(ν).
    pub fn evaluate(&self, cycle_type: &Partition) -> Result<Rational> {
        if cycle_type.size() != self.degree {
            return Err(CoreError::InvalidInput(format!(
                "cycle type {cycle_type} is not a class of S_{}",
                self.degree
            )));
        }
        let mut total = Rational::zero();
        for (shape, coeff) in &self.coeffs {
            let chi = mn_character(shape, cycle_type)?;
            total += coeff * Rational::from_integer(chi);
        }
        Ok(total)
    }

    /// Σ over S_n of the pointwise values (class sizes times class values).
    pub fn class_total(&self) -> Result<Rational> {
        let mut total = Rational::zero();
        for class in partitions(self.degree) {
            let size = conjugacy_class_size(self.degree, &class)?;
            total += Rational::from_integer(size) * self.evaluate(&class)?;
        }
        Ok(total)
    }

    /// Whether the function is a probability measure on the group:
    /// nonnegative on every class with total mass exactly one.
    pub fn is_probability_measure(&self) -> Result<bool> {
        for class in partitions(self.degree) {
            if self.evaluate(&class)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(self.class_total()? == Rational::one())
    }
}

/// Canonical projection of χ_λ from S_{n+1} to S_n: sum over single-cell
/// removals weighted by (content + 1).
pub fn project_char_canonical(lambda: &Partition) -> Result<ClassFunction> {
    if lambda.size() == 0 {
        return Err(CoreError::InvalidInput(
            "cannot project the empty shape".into(),
        ));
    }
    let mut out = ClassFunction::zero(lambda.size() - 1);
    for (mu, _height) in remove_skew_hooks(lambda, 1) {
        let weight = SkewShape::new(lambda.clone(), mu.clone())?.content_product();
        out.add_term(mu, Rational::from_integer(weight))?;
    }
    Ok(out)
}

/// Projection of χ_λ shifted by one k-cycle: signed content-weighted sum
/// over skew k-hook removals.
pub fn project_char_shifted(lambda: &Partition, k: u32) -> Result<ClassFunction> {
    if k == 0 || k > lambda.size() {
        return Err(CoreError::InvalidInput(format!(
            "cycle length must satisfy 1 <= k <= {}, got {k}",
            lambda.size()
        )));
    }
    let mut out = ClassFunction::zero(lambda.size() - k);
    for (mu, height) in remove_skew_hooks(lambda, k) {
        let mut weight =
            Rational::from_integer(SkewShape::new(lambda.clone(), mu.clone())?.content_product());
        if height % 2 == 1 {
            weight = -weight;
        }
        out.add_term(mu, weight)?;
    }
    Ok(out)
}

/// Projection of χ_λ shifted by a permutation of cycle structure ν: signed
/// sum over nested hook-removal chains, content-weighted over the full
/// difference λ∖μ.
pub fn project_char_general(lambda: &Partition, nu: &Partition) -> Result<ClassFunction> {
    if nu.size() > lambda.size() {
        return Err(CoreError::InvalidInput(format!(
            "cycle structure {nu} is larger than the shape {lambda}"
        )));
    }
    // Signed count of chains ending at each μ; the content product depends
    // only on the endpoints.
    let mut chains: BTreeMap<Partition, BigInt> = BTreeMap::new();
    chains.insert(lambda.clone(), BigInt::one());
    for &part in nu.rows() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (shape, count) in &chains {
            for (mu, height) in remove_skew_hooks(shape, part) {
                let entry = next.entry(mu).or_insert_with(BigInt::zero);
                if height % 2 == 0 {
                    *entry += count;
                } else {
                    *entry -= count;
                }
            }
        }
        chains = next;
    }
    let mut out = ClassFunction::zero(lambda.size() - nu.size());
    for (mu, count) in chains {
        let weight = SkewShape::new(lambda.clone(), mu.clone())?.content_product();
        out.add_term(mu, Rational::from_integer(weight * count))?;
    }
    Ok(out)
}

/// Permutation of {1..N} whose cycles of sizes ν fill {n+1, …, N}
/// consecutively, fixing {1..n}. The shift element used by the oracle.
pub fn tail_cycles_permutation(n: u32, nu: &Partition, big_n: u32) -> Result<Permutation> {
    if n + nu.size() != big_n {
        return Err(CoreError::InvalidInput(format!(
            "cycle structure {nu} does not fill {{{}..{big_n}}}",
            n + 1
        )));
    }
    let mut cycles = Vec::new();
    let mut start = n + 1;
    for &len in nu.rows() {
        cycles.push((start..start + len).collect());
        start += len;
    }
    Permutation::from_cycles(big_n, cycles)
}

fn for_each_permutation<F: FnMut(&[u32])>(n: u32, mut f: F) {
    let mut a: Vec<u32> = (1..=n).collect();
    let n = n as usize;
    f(&a);
    if n == 0 {
        return;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn one_line_cycle_type(w: &[u32]) -> Partition {
    let n = w.len();
    let mut visited = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in 1..=n as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut len = 0u32;
        let mut e = start;
        while !visited[e as usize] {
            visited[e as usize] = true;
            len += 1;
            e = w[e as usize - 1];
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths).expect("cycle lengths form a partition")
}

/// Independent oracle for the projection formulas: for every u in S_n, the
/// exact fiber sum Σ_{w ∈ S_N, w induces u on {1..n}} χ_λ(w·g), by direct
/// enumeration of S_N. Keys are one-line forms of u.
pub fn brute_force_shifted_projection(
    lambda: &Partition,
    g: &Permutation,
    n: u32,
) -> Result<BTreeMap<Vec<u32>, Rational>> {
    let big_n = lambda.size();
    if big_n > 8 {
        return Err(CoreError::SizeLimit(format!(
            "brute-force enumeration is capped at degree 8, got {big_n}"
        )));
    }
    if g.degree() != big_n as usize || !g.is_natural_domain() {
        return Err(CoreError::InvalidInput(format!(
            "shift element must be a permutation of 1..{big_n}"
        )));
    }
    if n > big_n {
        return Err(CoreError::InvalidInput(format!(
            "projection target {n} exceeds degree {big_n}"
        )));
    }
    let g_ol = g.one_line();
    if (1..=n).any(|a| g_ol[a as usize - 1] != a) {
        return Err(CoreError::InvalidInput(format!(
            "shift element must fix {{1..{n}}}"
        )));
    }
    let table = character_table(lambda)?;
    let mut sums: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for_each_permutation(big_n, |w| {
        let mut u = Vec::with_capacity(n as usize);
        for a in 1..=n {
            let mut b = w[a as usize - 1];
            while b > n {
                b = w[b as usize - 1];
            }
            u.push(b);
        }
        let wg: Vec<u32> = (0..big_n as usize).map(|i| w[g_ol[i] as usize - 1]).collect();
        let value = &table[&one_line_cycle_type(&wg)];
        *sums.entry(u).or_insert_with(BigInt::zero) += value;
    });
    Ok(sums
        .into_iter()
        .map(|(u, v)| (u, Rational::from_integer(v)))
        .collect())
}

/// Whether a class function agrees pointwise with a brute-force fiber-sum
/// table over all of S_n.
pub fn matches_brute_force(
    cf: &ClassFunction,
    oracle: &BTreeMap<Vec<u32>, Rational>,
) -> Result<bool> {
    let n = cf.degree();
    let expected_points: u64 = (1..=n as u64).product();
    if oracle.len() as u64 != expected_points.max(1) {
        return Ok(false);
    }
    for (u, value) in oracle {
        let perm = Permutation::from_one_line(u)?;
        if cf.evaluate(&perm.cycle_type())? != *value {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Character decomposition of the uniform measure on N-cycles:
/// τ_N = (1/N!) Σ_k (−1)^{N−k} χ_{(k 1^{N−k})}.
pub fn tau_decomposition(big_n: u32) -> Result<ClassFunction> {
    if big_n == 0 {
        return Err(CoreError::InvalidInput("degree must be at least 1".into()));
    }
    let nf = factorial(big_n);
    let mut out = ClassFunction::zero(big_n);
    for k in 1..=big_n {
        let mut coeff = Rational::new(BigInt::one(), nf.clone());
        if (big_n - k) % 2 == 1 {
            coeff = -coeff;
        }
        out.add_term(Partition::hook(k, big_n)?, coeff)?;
    }
    Ok(out)
}

/// m averaged half steps applied to χ_λ and projected down to
/// S_{|λ|−2m}: the coefficient of χ_μ is the content product of λ∖μ times
/// the number of horizontal-2-strip chains from μ to λ.
pub fn halfstep_project(lambda: &Partition, m: u32) -> Result<ClassFunction> {
    if 2 * m > lambda.size() {
        return Err(CoreError::InvalidInput(format!(
            "cannot apply {m} half steps to a shape of size {}",
            lambda.size()
        )));
    }
    let n = lambda.size() - 2 * m;
    let mut out = ClassFunction::zero(n);
    for (mu, count) in two_strip_path_counts(lambda, n)? {
        let weight = SkewShape::new(lambda.clone(), mu.clone())?.content_product()
            * BigInt::from(count);
        out.add_term(mu, Rational::from_integer(weight))?;
    }
    Ok(out)
}

/// Route (i) for the convergence coefficients: project the hook
/// decomposition of τ_N term by term through `halfstep_project`.
pub fn a_q_route_halfstep(n: u32, q: u32) -> Result<BTreeMap<u32, Rational>> {
    if n < 2 {
        return Err(CoreError::InvalidInput(format!(
            "coefficients are defined for n >= 2, got {n}"
        )));
    }
    let big_n = n + 2 * q;
    let tau = tau_decomposition(big_n)?;
    let mut total = ClassFunction::zero(n);
    for (lambda, coeff) in tau.coefficients() {
        total = total.add(&halfstep_project(lambda, q)?.scale(coeff))?;
    }
    for shape in total.coefficients().keys() {
        if !shape.is_hook() {
            return Err(CoreError::ConsistencyFailure(format!(
                "projection of τ_{big_n} contains the non-hook character {shape}"
            )));
        }
    }
    let mut out = BTreeMap::new();
    for l in 1..=n {
        out.insert(l, total.coefficient(&Partition::hook(l, n)?));
    }
    Ok(out)
}

/// Route (ii): the closed-form sums
/// a_q(l) = Σ_k (−1)^{N−k}/N! · c(λ_k^N, λ_l^n) · p(λ_k^N, λ_l^n) with
/// c(λ_k^N, λ_l^n) = (−1)^{l−k} k!(N−k−1)!/(l!(n−l−1)!) and
/// p(λ_k^N, λ_l^n) = C(q, 2q−k+l); a_q(n) = 1/n! (only k = N survives).
pub fn a_q_route_closed_form(n: u32, q: u32) -> Result<BTreeMap<u32, Rational>> {
    if n < 2 {
        return Err(CoreError::InvalidInput(format!(
            "coefficients are defined for n >= 2, got {n}"
        )));
    }
    let big_n = n + 2 * q;
    let mut out = BTreeMap::new();
    for l in 1..=n {
        if l == n {
            out.insert(l, Rational::new(BigInt::one(), factorial(n)));
            continue;
        }
        // Every summand carries the same sign (−1)^{N−k}·(−1)^{l−k} = (−1)^{n−l}.
        let mut sum = BigInt::zero();
        for k in (q + l)..=(2 * q + l) {
            let j = 2 * q + l - k;
            sum += factorial(k)
                * factorial(big_n - k - 1)
                * num_integer::binomial(BigInt::from(q), BigInt::from(j));
        }
        let denom = factorial(l) * factorial(n - l - 1) * factorial(big_n);
        let mut value = Rational::new(sum, denom);
        if (n - l) % 2 == 1 {
            value = -value;
        }
        out.insert(l, value);
    }
    Ok(out)
}

/// Exact coefficients of τ^q_n = Σ_l a_q(l) χ_{(l 1^{n−l})}, computed by
/// both routes; errors if they disagree.
pub fn a_q_coefficients(n: u32, q: u32) -> Result<BTreeMap<u32, Rational>> {
    let via_projection = a_q_route_halfstep(n, q)?;
    let closed_form = a_q_route_closed_form(n, q)?;
    if via_projection != closed_form {
        return Err(CoreError::ConsistencyFailure(format!(
            "a_q routes disagree at n={n}, q={q}: projection {via_projection:?}, closed form {closed_form:?}"
        )));
    }
    Ok(via_projection)
}

/// τ^q_n as a class function on S_n.
pub fn tau_q_class_function(n: u32, q: u32) -> Result<ClassFunction> {
    let coeffs = a_q_coefficients(n, q)?;
    ClassFunction::from_terms(
        n,
        coeffs
            .into_iter()
            .map(|(l, c)| (Partition::hook(l, n).expect("1 <= l <= n"), c)),
    )
}
