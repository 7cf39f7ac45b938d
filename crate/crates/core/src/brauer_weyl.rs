//! The correspondence between spinor outer products and basis blades.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitcode::Bitcode;
use crate::blade::{BladeBasis, BladeIndex};
use crate::error::{Result, SgaError};
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::rep::Representation;
use crate::scalar::{Exact, Field, Sign};

pub use crate::blade::{decompose_multivector, gamma_coefficients, spinor_outer_decompose, spinor_outer_reconstruct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Handedness {
    Right,
    Left,
}

/// `P_R = ½(1 + κ)` or `P_L = ½(1 − κ)`.
pub fn projector(rep: &Representation, h: Handedness) -> Result<Matrix<Exact>> {
    if rep.is_projected() {
        return Err(SgaError::InvalidConfig(
            "chiral projectors need even N or an embedded odd representation".into(),
        ));
    }
    let kappa = rep.chiral_operator();
    let id = Matrix::identity(rep.dim());
    let half = Exact::ratio(1, 2);
    Ok(match h {
        Handedness::Right => (&id + kappa).scale(&half),
        Handedness::Left => (&id - kappa).scale(&half),
    })
}

/// Left multiplication by the chiral projector.
pub fn chiral_project<T: Field>(rep: &Representation, m: &Matrix<T>, h: Handedness) -> Result<Matrix<T>> {
    projector(rep, h)?.map(T::from_exact).checked_mul(m)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoFailure {
    pub direction: &'static str,
    pub item: String,
}

/// Result of checking both directions of the correspondence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoReport {
    pub dim: usize,
    pub n_dims: usize,
    pub basis: BladeBasis,
    pub blades_checked: usize,
    pub outer_checked: usize,
    pub failures: Vec<IsoFailure>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every basis blade, that its outer-product expansion rebuilds
/// it, and for every basis outer product, that its blade expansion rebuilds it.
pub fn verify_isomorphism(rep: &Representation, basis: BladeBasis) -> Result<IsoReport> {
    let dim = rep.dim();
    let bits = rep.bits();
    let blades = rep.blade_basis(basis);
    let eps = rep.mono_metric().clone();
    let eps_inv = eps.map(|x| match rep.metric_square() {
        Sign::Plus => x.clone(),
        Sign::Minus => -x,
    });

    let monos: Vec<(Monomial<Exact>, Monomial<Exact>)> = blades
        .par_iter()
        .map(|b| Ok((rep.blade_monomial(b)?, rep.reciprocal_monomial(b)?)))
        .collect::<Result<_>>()?;

    // blades -> outer products -> blades
    let mut failures: Vec<IsoFailure> = blades
        .par_iter()
        .zip(&monos)
        .filter_map(|(b, (g, _))| {
            // γ_A^{ab} = (γ_A ε⁻¹)[a][b]; Σ c^{ab} ε_a ε_b· = C ε
            let coeffs = g.mul(&eps_inv);
            let mut rebuilt = vec![None; dim];
            for (a, bb, c) in coeffs.nonzeros() {
                if let Some((j, e)) = eps.row(bb) {
                    rebuilt[a] = Some((*j, c * e));
                }
            }
            let ok = g.nonzeros().count() == rebuilt.iter().flatten().count()
                && g.nonzeros().all(|(i, j, v)| matches!(&rebuilt[i], Some((c, w)) if *c == j && w == v));
            (!ok).then(|| IsoFailure { direction: "blade_to_outer", item: b.label(rep.n_dims()) })
        })
        .collect();

    // outer products -> blades -> outer products. γ^A_{ab} = (ε γ^A)[b][a]/2^bits,
    // so bucket every nonzero of ε γ^A by its (a, b) pair.
    let mut buckets: HashMap<(usize, usize), Vec<(usize, Exact)>> = HashMap::new();
    for (idx, (_, recip)) in monos.iter().enumerate() {
        for (b, a, v) in eps.mul(recip).nonzeros() {
            buckets.entry((a, b)).or_default().push((idx, v.clone()));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|a| (0..dim).map(move |b| (a, b))).collect();
    let expected = |a: usize, b: usize| eps.row(b).map(|(j, e)| (a, *j, e.clone()));
    let failed_pairs: Vec<(usize, usize)> = match UnitPhases::new(&monos, &buckets) {
        Some(phases) => pairs
            .par_iter()
            .map_init(
                || (vec![[0u32; 4]; dim * dim], Vec::new()),
                |(counts, touched), &(a, b)| {
                    !phases.rebuilds(dim, (a, b), counts, touched, expected(a, b))
                },
            )
            .zip(&pairs)
            .filter_map(|(bad, p)| bad.then_some(*p))
            .collect(),
        None => {
            let norm = Exact::ratio(1, dim as i64);
            pairs
                .par_iter()
                .filter(|&&(a, b)| {
                    let mut acc: HashMap<(usize, usize), Exact> = HashMap::new();
                    for (idx, c) in buckets.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[]) {
                        let c = c * &norm;
                        for (i, j, v) in monos[*idx].0.nonzeros() {
                            *acc.entry((i, j)).or_default() += &(&c * v);
                        }
                    }
                    acc.retain(|_, v| !v.is_zero());
                    // ε_a ε_b· has the single entry ε[b][σ(b)] at (a, σ(b))
                    let ok = match expected(a, b) {
                        Some((i, j, e)) => acc.len() == 1 && acc.get(&(i, j)) == Some(&e),
                        None => acc.is_empty(),
                    };
                    !ok
                })
                .copied()
                .collect()
        }
    };
    let outer_failures = failed_pairs.into_iter().map(|(a, b)| IsoFailure {
        direction: "outer_to_blade",
        item: format!("{} {}", Bitcode::from_index(bits, a), Bitcode::from_index(bits, b)),
    });
    failures.extend(outer_failures);

    Ok(IsoReport {
        dim,
        n_dims: rep.n_dims(),
        basis,
        blades_checked: blades.len(),
        outer_checked: pairs.len(),
        failures,
    })
}

/// Phase-only view of the reconstruction for bases whose blades and
/// coefficients are all `±1, ±i`: every contribution is then a unit over
/// `2^bits`, so the sums are exact integer counts per phase.
struct UnitPhases {
    blades: Vec<Vec<(usize, usize, u8)>>,
    buckets: HashMap<(usize, usize), Vec<(usize, u8)>>,
}

fn unit_phase(x: &Exact) -> Option<u8> {
    [Exact::one(), Exact::i(), -Exact::one(), -Exact::i()].iter().position(|u| u == x).map(|p| p as u8)
}

impl UnitPhases {
    fn new(monos: &[(Monomial<Exact>, Monomial<Exact>)], buckets: &HashMap<(usize, usize), Vec<(usize, Exact)>>) -> Option<Self> {
        let blades = monos
            .iter()
            .map(|(g, _)| g.nonzeros().map(|(i, j, v)| Some((i, j, unit_phase(v)?))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        let buckets = buckets
            .iter()
            .map(|(k, v)| Some((*k, v.iter().map(|(idx, c)| Some((*idx, unit_phase(c)?))).collect::<Option<Vec<_>>>()?)))
            .collect::<Option<HashMap<_, _>>>()?;
        Some(UnitPhases { blades, buckets })
    }

    /// Whether `Σ_A γ^A_{ab} γ_A` equals the single expected entry.
    fn rebuilds(
        &self,
        dim: usize,
        pair: (usize, usize),
        counts: &mut [[u32; 4]],
        touched: &mut Vec<usize>,
        expected: Option<(usize, usize, Exact)>,
    ) -> bool {
        touched.clear();
        for &(idx, pc) in self.buckets.get(&pair).map(Vec::as_slice).unwrap_or(&[]) {
            for &(i, j, pv) in &self.blades[idx] {
                let cell = i * dim + j;
                if counts[cell] == [0; 4] {
                    touched.push(cell);
                }
                counts[cell][((pc + pv) % 4) as usize] += 1;
            }
        }
        let want = expected.as_ref().and_then(|(i, j, e)| Some((i * dim + j, unit_phase(e)?)));
        let mut ok = expected.is_none() || want.is_some();
        let mut seen_expected = false;
        for &cell in touched.iter() {
            let [n0, n1, n2, n3] = counts[cell].map(i64::from);
            let (re, im) = (n0 - n2, n1 - n3);
            let target = match want {
                Some((c, p)) if c == cell => {
                    seen_expected = true;
                    [(1, 0), (0, 1), (-1, 0), (0, -1)][p as usize]
                }
                _ => (0, 0),
            };
            let d = dim as i64;
            ok &= (re, im) == (target.0 * d, target.1 * d);
            counts[cell] = [0; 4];
        }
        ok && (want.is_none() || seen_expected)
    }
}

/// The outer product `ε_a ε_b·` expanded over blades, zeros omitted.
pub fn outer_to_blades(rep: &Representation, a: &Bitcode, b: &Bitcode, basis: BladeBasis) -> Result<Vec<(BladeIndex, Exact)>> {
    let mut out = Vec::new();
    for blade in rep.blade_basis(basis) {
        let (lower, _) = gamma_coefficients(rep, &blade, a, b)?;
        if !lower.is_zero() {
            out.push((blade, lower));
        }
    }
    Ok(out)
}
