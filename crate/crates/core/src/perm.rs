//! Finite symmetric-group layer: permutations in cycle form, induced
//! permutations on subsets, the labelled cycle-insertion sampler attached to
//! a simplex point, Haar sampling, and the transposition-shift step.
//!
//! A permutation is stored as the set of its cycles in canonical form (each
//! cycle rotated so its minimum comes first, cycles sorted by minimum, fixed
//! points kept). Cycle entries are successor chains: the cycle `[a, b, c]`
//! maps a→b→c→a. Keeping explicit cyclic order is what makes induced
//! permutations and uniform insertion positions well defined.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{CoreError, Result};
use crate::partition::Partition;
use crate::simplex::MassPartition;
use crate::stats::{chi_square_homogeneity, ChiSquareTest};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    domain: Vec<u32>,
    cycles: Vec<Vec<u32>>,
}

/// Cycle lengths in non-increasing order with their fractions of the degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleProfile {
    pub lengths: Vec<usize>,
    pub fractions: Vec<f64>,
}

impl CycleProfile {
    pub fn to_mass_partition(&self) -> MassPartition {
        MassPartition::from_unnormalized(self.fractions.clone())
            .expect("cycle fractions are positive with unit sum")
    }
}

/// A permutation sampled by the labelled insertion process, with the label
/// (index into the driving mass vector) of each cycle. Labels are parallel
/// to `permutation.cycles()`.
#[derive(Debug, Clone)]
pub struct LabeledPermutation {
    pub permutation: Permutation,
    pub cycle_labels: Vec<usize>,
}

fn canonical_cycles(mut cycles: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    for cycle in &mut cycles {
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        cycle.rotate_left(min_pos);
    }
    cycles.sort_by_key(|c| c[0]);
    cycles
}

impl Permutation {
    /// Identity on {1..n}.
    pub fn identity(n: u32) -> Self {
        Self {
            domain: (1..=n).collect(),
            cycles: (1..=n).map(|e| vec![e]).collect(),
        }
    }

    /// Permutation of {1..n} from cycles; omitted elements become fixed
    /// points.
    pub fn from_cycles(n: u32, cycles: Vec<Vec<u32>>) -> Result<Self> {
        Self::from_cycles_on((1..=n).collect(), cycles)
    }

    /// Permutation of an arbitrary finite domain from cycles; omitted
    /// elements become fixed points.
    pub fn from_cycles_on(mut domain: Vec<u32>, cycles: Vec<Vec<u32>>) -> Result<Self> {
        domain.sort_unstable();
        domain.dedup();
        let domain_set: BTreeSet<u32> = domain.iter().copied().collect();
        let mut seen = BTreeSet::new();
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(CoreError::InvalidInput("empty cycle".into()));
            }
            for &e in cycle {
                if !domain_set.contains(&e) {
                    return Err(CoreError::InvalidInput(format!(
                        "cycle element {e} is outside the domain"
                    )));
                }
                if !seen.insert(e) {
                    return Err(CoreError::InvalidInput(format!(
                        "element {e} appears in more than one cycle position"
                    )));
                }
            }
        }
        let mut all = cycles;
        for &e in &domain {
            if !seen.contains(&e) {
                all.push(vec![e]);
            }
        }
        Ok(Self {
            domain,
            cycles: canonical_cycles(all),
        })
    }

    /// Permutation of {1..n} from its one-line form: `images[i-1] = w(i)`.
    pub fn from_one_line(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &im in images {
            if im == 0 || im as usize > n || seen[im as usize] {
                return Err(CoreError::InvalidInput(format!(
                    "one-line form {images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[im as usize] = true;
        }
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if visited[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            while !visited[e as usize] {
                visited[e as usize] = true;
                cycle.push(e);
                e = images[e as usize - 1];
            }
            cycles.push(cycle);
        }
        Ok(Self {
            domain: (1..=n as u32).collect(),
            cycles,
        })
    }

    pub fn degree(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[u32] {
        &self.domain
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn is_natural_domain(&self) -> bool {
        self.domain.iter().enumerate().all(|(i, &e)| e == i as u32 + 1)
    }

    /// One-line form for a permutation of {1..n}.
    pub fn one_line(&self) -> Vec<u32> {
        assert!(self.is_natural_domain(), "one-line form needs domain 1..n");
        let mut images = vec![0u32; self.degree()];
        for cycle in &self.cycles {
            for (i, &e) in cycle.iter().enumerate() {
                images[e as usize - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        images
    }

    /// Induced permutation on `j ⊆ domain`: every cycle is restricted to its
    /// `j`-elements in cyclic order; empty restrictions vanish.
    pub fn induced(&self, j: &[u32]) -> Result<Permutation> {
        let j_set: BTreeSet<u32> = j.iter().copied().collect();
        let domain_set: BTreeSet<u32> = self.domain.iter().copied().collect();
        if !j_set.is_subset(&domain_set) {
            return Err(CoreError::InvalidInput(
                "subset is not contained in the permutation domain".into(),
            ));
        }
        let cycles: Vec<Vec<u32>> = self
            .cycles
            .iter()
            .map(|c| c.iter().copied().filter(|e| j_set.contains(e)).collect::<Vec<u32>>())
            .filter(|c: &Vec<u32>| !c.is_empty())
            .collect();
        Ok(Permutation {
            domain: j_set.into_iter().collect(),
            cycles: canonical_cycles(cycles),
        })
    }

    /// Cycle lengths sorted non-increasing, with fractions of the degree.
    pub fn cycle_profile(&self) -> CycleProfile {
        let mut lengths: Vec<usize> = self.cycles.iter().map(|c| c.len()).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let n = self.degree() as f64;
        let fractions = lengths.iter().map(|&l| l as f64 / n).collect();
        CycleProfile { lengths, fractions }
    }

    /// Cycle type as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let lengths: Vec<u32> = {
            let mut l: Vec<u32> = self.cycles.iter().map(|c| c.len() as u32).collect();
            l.sort_unstable_by(|a, b| b.cmp(a));
            l
        };
        Partition::new(lengths).expect("sorted cycle lengths form a partition")
    }

    /// Product self·other acting as x ↦ self(other(x)); both factors must be
    /// permutations of {1..n}.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.domain != other.domain {
            return Err(CoreError::InvalidInput(
                "can only multiply permutations of the same domain".into(),
            ));
        }
        assert!(self.is_natural_domain());
        let a = self.one_line();
        let b = other.one_line();
        let images: Vec<u32> = (0..a.len()).map(|i| a[b[i] as usize - 1]).collect();
        Permutation::from_one_line(&images)
    }

    /// Right multiplication by the transposition (a b).
    pub fn right_multiply_transposition(&self, a: u32, b: u32) -> Permutation {
        assert!(self.is_natural_domain());
        let mut images = self.one_line();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation::from_one_line(&images).expect("swap preserves bijectivity")
    }
}

/// One draw of the labelled cycle-insertion process attached to `x`, run for
/// `n` steps. Element 1 founds a cycle labelled j with probability x_j; each
/// next element joins the cycle labelled i with total probability x_i at a
/// uniformly chosen insertion position, or founds a new cycle under an
/// unused label.
pub fn sample_px<R: Rng + ?Sized>(
    x: &MassPartition,
    n: u32,
    rng: &mut R,
) -> Result<LabeledPermutation> {
    if n == 0 {
        return Err(CoreError::InvalidInput("degree must be at least 1".into()));
    }
    let n = n as usize;
    let mut next = vec![0u32; n + 1];
    let mut label_members: Vec<Vec<u32>> = vec![Vec::new(); x.len()];
    let mut element_label = vec![0usize; n + 1];
    for e in 1..=n as u32 {
        let label = x.size_biased_index(rng);
        let members = &mut label_members[label];
        if members.is_empty() {
            next[e as usize] = e;
        } else {
            let anchor = members[rng.gen_range(0..members.len())];
            next[e as usize] = next[anchor as usize];
            next[anchor as usize] = e;
        }
        members.push(e);
        element_label[e as usize] = label;
    }
    // Walk successor chains; scanning in increasing order starts every cycle
    // at its minimum, which is already canonical.
    let mut visited = vec![false; n + 1];
    let mut cycles = Vec::new();
    let mut cycle_labels = Vec::new();
    for start in 1..=n as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut e = start;
        while !visited[e as usize] {
            visited[e as usize] = true;
            cycle.push(e);
            e = next[e as usize];
        }
        cycle_labels.push(element_label[start as usize]);
        cycles.push(cycle);
    }
    Ok(LabeledPermutation {
        permutation: Permutation {
            domain: (1..=n as u32).collect(),
            cycles,
        },
        cycle_labels,
    })
}

/// Uniform random element of S_n by Fisher–Yates.
pub fn haar_sample<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<Permutation> {
    if n == 0 {
        return Err(CoreError::InvalidInput("degree must be at least 1".into()));
    }
    let mut images: Vec<u32> = (1..=n).collect();
    for i in (1..n as usize).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_one_line(&images)
}

/// Cycle fractions of a Haar-random permutation of degree `n`.
pub fn haar_cycle_fractions<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<MassPartition> {
    Ok(haar_sample(n, rng)?.cycle_profile().to_mass_partition())
}

/// The split-merge step realized on the group side: sample w from the
/// labelled insertion process at degree `n`, multiply on the right by the
/// transposition (1 2), return the cycle fractions of the product.
pub fn shifted_step_via_group<R: Rng + ?Sized>(
    x: &MassPartition,
    n: u32,
    rng: &mut R,
) -> Result<MassPartition> {
    if n < 2 {
        return Err(CoreError::InvalidInput(
            "the transposition shift needs degree at least 2".into(),
        ));
    }
    let w = sample_px(x, n, rng)?.permutation;
    let shifted = w.right_multiply_transposition(1, 2);
    Ok(shifted.cycle_profile().to_mass_partition())
}

/// Empirical coherence test: the projection to S_n of the insertion process
/// at degree n+1 is compared with the direct process at degree n by a
/// chi-square over full permutations (n ≤ 4) or conjugacy classes.
pub fn coherence_check<R: Rng + ?Sized>(
    x: &MassPartition,
    n: u32,
    samples: u32,
    rng: &mut R,
) -> Result<ChiSquareTest> {
    if n == 0 || samples == 0 {
        return Err(CoreError::InvalidInput(
            "coherence check needs degree and sample count at least 1".into(),
        ));
    }
    let key = |w: &Permutation| -> Vec<u32> {
        if n <= 4 {
            w.one_line()
        } else {
            w.cycle_type().rows().to_vec()
        }
    };
    let subset: Vec<u32> = (1..=n).collect();
    let mut direct = std::collections::BTreeMap::new();
    let mut projected = std::collections::BTreeMap::new();
    for _ in 0..samples {
        let w = sample_px(x, n, rng)?.permutation;
        *direct.entry(key(&w)).or_insert(0u64) += 1;
        let w_up = sample_px(x, n + 1, rng)?.permutation;
        *projected.entry(key(&w_up.induced(&subset)?)).or_insert(0u64) += 1;
    }
    Ok(chi_square_homogeneity(&direct, &projected))
}
