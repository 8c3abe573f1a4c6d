//! Wreath Macdonald polynomials and the operators built from them.
//!
//! [`Wreath`] fixes `(r, α)`, a backend and a solve mode, and serves `H_λ`
//! and `H_λ†` for every `λ` with core `α`, expansions in either basis and
//! the diagonal operator `∇_α`.

mod cache;
mod operators;
mod pieri;
mod solver;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use cache::{cache_dir_from_env, TableEntry, WreathBasisTable, CACHE_ENV, TABLE_VERSION};
pub use operators::{
    delta_series, expected_ext, ext_expansion, ext_operator, ext_pairing, nabla_eigenvalue, nekrasov_at, norm_expected,
    v_operator,
};
pub use pieri::{pieri_mult, pieri_mult_expected, pieri_skew, pieri_skew_expected, PieriCheck};
pub use solver::{
    constraint_rows, constraint_selection, solve_h, solve_h_embedded, solve_h_exact, transitions, Normalization,
    Transitions,
};

use crate::coeff::{Backend, Coeff, RatFunc};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{core_quotient, enumerate_with_core, is_core, multipartitions, MultiPartition, Partition};
use crate::symfunc::{neg_iota_apply, powersum_to_schur, schur_to_powersum, wreath_pairing, ColoredSymFunc};

/// Where `H_λ` comes from in a non-exact backend.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMode {
    /// Solve over `Q(q,t)` once, then embed.
    #[default]
    Exact,
    /// Solve directly in the backend's field (evaluation points).
    Direct,
}

type Coeffs<C> = Arc<Vec<C>>;
type Matrix<C> = Arc<Vec<Vec<C>>>;

pub struct Wreath<B: Backend> {
    backend: B,
    r: u32,
    core: Partition,
    norm: Normalization,
    mode: SolveMode,
    solve_expansions: bool,
    h_cache: Mutex<HashMap<(Partition, bool), Coeffs<B::Elem>>>,
    schur_cache: Mutex<HashMap<(MultiPartition, u32), ColoredSymFunc<B::Elem>>>,
    matrix_cache: Mutex<HashMap<(u32, bool), Matrix<B::Elem>>>,
    transition_cache: Mutex<HashMap<(u32, bool), Arc<(Vec<Vec<B::Elem>>, Vec<Vec<B::Elem>>)>>>,
}

impl<B: Backend> Wreath<B> {
    pub fn new(backend: B, r: u32, core: Partition, norm: Normalization, mode: SolveMode) -> Result<Self> {
        if !is_core(&core, r)? {
            return Err(Error::InvalidInput(format!("{} is not a {}-core", core, r)));
        }
        Ok(Self {
            backend,
            r,
            core,
            norm,
            mode,
            solve_expansions: false,
            h_cache: Mutex::new(HashMap::new()),
            schur_cache: Mutex::new(HashMap::new()),
            matrix_cache: Mutex::new(HashMap::new()),
            transition_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Makes `∇` expand by linear solves instead of the dual basis. Cheap at
    /// evaluation points, and independent of orthogonality.
    pub fn with_solved_expansions(mut self, on: bool) -> Self {
        self.solve_expansions = on;
        self
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    /// All `λ` with core `α` and `|quot λ| = n`.
    pub fn partitions(&self, n: u32) -> Result<Vec<Partition>> {
        enumerate_with_core(&self.core, self.r, n)
    }

    fn check(&self, lambda: &Partition) -> Result<u32> {
        let cq = core_quotient(lambda, self.r)?;
        if cq.core != self.core {
            return Err(Error::InvalidInput(format!(
                "{} has core {}, expected {}",
                lambda, cq.core, self.core
            )));
        }
        Ok(cq.quotient.size())
    }

    /// Multi-Schur coefficients of `H_λ` (or of `H_λ[X; q⁻¹, t⁻¹]` when
    /// `inverted`), in the order of [`multipartitions`].
    pub fn schur_coeffs(&self, lambda: &Partition, inverted: bool) -> Result<Coeffs<B::Elem>> {
        self.check(lambda)?;
        let key = (lambda.clone(), inverted);
        if let Some(v) = self.h_cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let b = if inverted {
            self.backend.qt_inverted()
        } else {
            self.backend.clone()
        };
        let v = match self.mode {
            SolveMode::Exact => solve_h_exact(lambda, self.r, self.norm)?
                .iter()
                .map(|c| b.embed(c))
                .collect::<Result<Vec<_>>>()?,
            SolveMode::Direct => {
                let n = self.check(lambda)?;
                let emb = self.embedded_transitions(n, inverted, &b)?;
                solve_h_embedded(lambda, self.r, &emb.0, &emb.1, self.norm, &b.one())?
            }
        };
        let v = Arc::new(v);
        self.h_cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    /// The transition matrices of degree `n` embedded once per backend.
    #[allow(clippy::type_complexity)]
    fn embedded_transitions(
        &self,
        n: u32,
        inverted: bool,
        b: &B,
    ) -> Result<Arc<(Vec<Vec<B::Elem>>, Vec<Vec<B::Elem>>)>> {
        if let Some(t) = self.transition_cache.lock().unwrap().get(&(n, inverted)) {
            return Ok(t.clone());
        }
        let tr = transitions(self.r, n)?;
        let embed = |m: &Vec<Vec<RatFunc>>| -> Result<Vec<Vec<B::Elem>>> {
            m.iter().map(|row| row.iter().map(|x| b.embed(x)).collect()).collect()
        };
        let t = Arc::new((embed(&tr.up)?, embed(&tr.down)?));
        self.transition_cache.lock().unwrap().insert((n, inverted), t.clone());
        Ok(t)
    }

    fn schur_function(&self, nu: &MultiPartition, cap: u32) -> Result<ColoredSymFunc<B::Elem>> {
        let key = (nu.clone(), cap);
        if let Some(f) = self.schur_cache.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let f = schur_to_powersum(nu, cap, &self.backend)?;
        self.schur_cache.lock().unwrap().insert(key, f.clone());
        Ok(f)
    }

    fn combine(&self, n: u32, coeffs: &[B::Elem], cap: u32) -> Result<ColoredSymFunc<B::Elem>> {
        let mut out = ColoredSymFunc::zero(self.r, cap);
        for (nu, c) in multipartitions(self.r, n).iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (k, v) in self.schur_function(nu, cap.max(n))?.terms() {
                out.add_term(k.clone(), v.mul(c));
            }
        }
        Ok(out)
    }

    /// `H_λ` in colored power sums, with degree cap `cap`.
    pub fn h(&self, lambda: &Partition, cap: u32) -> Result<ColoredSymFunc<B::Elem>> {
        let n = self.check(lambda)?;
        self.combine(n, &self.schur_coeffs(lambda, false)?, cap)
    }

    /// `H_λ† = H_λ[−ιX^•; q⁻¹, t⁻¹]`.
    pub fn dagger(&self, lambda: &Partition, cap: u32) -> Result<ColoredSymFunc<B::Elem>> {
        let n = self.check(lambda)?;
        Ok(neg_iota_apply(&self.combine(
            n,
            &self.schur_coeffs(lambda, true)?,
            cap,
        )?))
    }

    /// Coefficients of `f` in `{H_λ}` (or `{H_λ†}`), read off with the dual
    /// basis: `⟨H_μ†, H_λ⟩' = δ_{λμ} N_{λ,λ}(1)`.
    pub fn expand(&self, f: &ColoredSymFunc<B::Elem>, dagger: bool) -> Result<BTreeMap<Partition, B::Elem>> {
        let mut out = BTreeMap::new();
        let Some(top) = f.max_degree() else {
            return Ok(out);
        };
        for d in 0..=top {
            let comp = f.component(d);
            if comp.is_zero() {
                continue;
            }
            for lam in self.partitions(d)? {
                let v = if dagger {
                    wreath_pairing(&comp, &self.h(&lam, d)?, &self.backend)?
                } else {
                    wreath_pairing(&self.dagger(&lam, d)?, &comp, &self.backend)?
                };
                if !v.is_zero() {
                    let norm = self.backend.embed(&norm_expected(&lam, self.r)?)?;
                    out.insert(lam, v.div(&norm)?);
                }
            }
        }
        Ok(out)
    }

    /// Same as [`Wreath::expand`], by solving the multi-Schur linear system
    /// in each degree. Independent of orthogonality, but slow over `Q(q,t)`.
    pub fn expand_by_solve(&self, f: &ColoredSymFunc<B::Elem>, dagger: bool) -> Result<BTreeMap<Partition, B::Elem>> {
        let mut out = BTreeMap::new();
        let Some(top) = f.max_degree() else {
            return Ok(out);
        };
        let like = self.backend.one();
        for d in 0..=top {
            let comp = f.component(d);
            if comp.is_zero() {
                continue;
            }
            let basis = multipartitions(self.r, d);
            let pos: HashMap<&MultiPartition, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
            let lambdas = self.partitions(d)?;
            let a = self.expansion_matrix(d, dagger)?;
            let mut b = vec![like.zero_like(); basis.len()];
            for (rho, c) in powersum_to_schur(&comp) {
                b[pos[&rho]] = c;
            }
            let x = a.iter().map(|row| {
                row.iter()
                    .zip(&b)
                    .filter(|(_, y)| !y.is_zero())
                    .fold(like.zero_like(), |acc, (m, y)| acc.add(&m.mul(y)))
            });
            for (lam, c) in lambdas.into_iter().zip(x) {
                if !c.is_zero() {
                    out.insert(lam, c);
                }
            }
        }
        Ok(out)
    }

    /// Inverse of the matrix of multi-Schur coefficients of the degree-`d`
    /// basis (one column per `λ`).
    fn expansion_matrix(&self, d: u32, dagger: bool) -> Result<Matrix<B::Elem>> {
        if let Some(m) = self.matrix_cache.lock().unwrap().get(&(d, dagger)) {
            return Ok(m.clone());
        }
        let basis = multipartitions(self.r, d);
        let pos: HashMap<&MultiPartition, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let lambdas = self.partitions(d)?;
        let mut a = vec![vec![self.backend.zero(); lambdas.len()]; basis.len()];
        for (col, lam) in lambdas.iter().enumerate() {
            let g = if dagger { self.dagger(lam, d)? } else { self.h(lam, d)? };
            for (rho, c) in powersum_to_schur(&g) {
                a[pos[&rho]][col] = c;
            }
        }
        let a = Arc::new(linalg::inverse(&a, &self.backend.one())?);
        self.matrix_cache.lock().unwrap().insert((d, dagger), a.clone());
        Ok(a)
    }

    /// Recombines an expansion.
    pub fn assemble(
        &self,
        coeffs: &BTreeMap<Partition, B::Elem>,
        dagger: bool,
        cap: u32,
    ) -> Result<ColoredSymFunc<B::Elem>> {
        let mut out = ColoredSymFunc::zero(self.r, cap);
        for (lam, c) in coeffs {
            let g = if dagger {
                self.dagger(lam, cap)?
            } else {
                self.h(lam, cap)?
            };
            out = out.add(&g.scale(c));
        }
        Ok(out)
    }

    /// `∇_α` (on the `H` basis) or `∇_α†` (on the `H†` basis), or their
    /// inverses.
    pub fn nabla(&self, f: &ColoredSymFunc<B::Elem>, dagger: bool, inverse: bool) -> Result<ColoredSymFunc<B::Elem>> {
        let coeffs = if self.solve_expansions {
            self.expand_by_solve(f, dagger)?
        } else {
            self.expand(f, dagger)?
        };
        let mut scaled = BTreeMap::new();
        for (lam, c) in coeffs {
            let e: RatFunc = nabla_eigenvalue(&lam, &self.core, self.r)?;
            let e = if inverse { e.inv()? } else { e };
            scaled.insert(lam, c.mul(&self.backend.embed(&e)?));
        }
        self.assemble(&scaled, dagger, f.cap())
    }
}

#[cfg(test)]
mod tests;
