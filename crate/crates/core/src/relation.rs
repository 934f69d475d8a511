//! Polynomials `T_lambda` expressing normalized character values at any class
//! through the values at cycles, with coefficients in `Q(N)`.
//!
//! The identity class variable is always replaced by 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Monomial, RationalFunction, RelationPoly, UniPoly};
use crate::connection::CensusCache;
use crate::error::{Error, Result};
use crate::oracle::{MnOracle, YoungDiagram};
use crate::partition::{factorial, Partition};
use crate::BigRational;

fn var_or_one(class: &Partition) -> RelationPoly {
    if class.is_identity() {
        RelationPoly::one()
    } else {
        RelationPoly::var(class.clone())
    }
}

/// `F_{x,y} = |x| t_x t_y - sum_mu c_mu t_mu`, which vanishes at the
/// normalized values of every irreducible character.
pub fn f_poly(cache: &mut CensusCache, x: &Partition, y: &Partition) -> Result<RelationPoly> {
    let lhs = (&var_or_one(x) * &var_or_one(y)).scale(&x.class_size_poly().into());
    let mut out = lhs;
    for (mu, c) in cache.get(x, y)? {
        out = &out - &var_or_one(mu).scale(&c.clone().into());
    }
    Ok(out)
}

/// Builds and memoizes `T_lambda` in the cycle variables.
#[derive(Default)]
pub struct TBuilder {
    census: CensusCache,
    memo: BTreeMap<Partition, RelationPoly>,
}

impl TBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn census(&mut self) -> &mut CensusCache {
        &mut self.census
    }

    /// `T_lambda`, so that `rho(lambda) = T_lambda(rho((2)), rho((3)), ..)`.
    pub fn t_poly(&mut self, lambda: &Partition) -> Result<RelationPoly> {
        if lambda.is_identity() {
            return Ok(RelationPoly::one());
        }
        if lambda.is_cycle() {
            return Ok(RelationPoly::var(lambda.clone()));
        }
        if let Some(t) = self.memo.get(lambda) {
            return Ok(t.clone());
        }
        let r = lambda.smallest_part();
        let x = Partition::cycle(r);
        let y = lambda.without_part(r).expect("smallest part present");
        let counts = self.census.get(&x, &y)?.clone();
        let c_lambda = counts
            .get(lambda)
            .cloned()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal(alloc::format!("no self term building T_{lambda}")))?;
        let ty = self.t_poly(&y)?;
        let mut acc = (&RelationPoly::var(x.clone()) * &ty).scale(&x.class_size_poly().into());
        for (mu, c) in &counts {
            if mu == lambda {
                continue;
            }
            if mu > lambda {
                return Err(Error::Internal(alloc::format!(
                    "class {mu} above {lambda} in the expansion for T_{lambda}"
                )));
            }
            let tm = self.t_poly(mu)?;
            acc = &acc - &tm.scale(&c.clone().into());
        }
        let t = acc.scale(&RationalFunction::from_poly(c_lambda).inv()?);
        check_structure(lambda, &t)?;
        self.memo.insert(lambda.clone(), t.clone());
        Ok(t)
    }

    /// `t_lambda - T_lambda`, the form in which the relations are listed and
    /// fed to ideal computations.
    pub fn relation(&mut self, lambda: &Partition) -> Result<RelationPoly> {
        Ok(&var_or_one(lambda) - &self.t_poly(lambda)?)
    }

    /// `T_lambda` rewritten over `t_{basis(k)}`; `basis[k - 1]` must have norm `k`.
    pub fn t_poly_general(&mut self, lambda: &Partition, basis: &[Partition]) -> Result<RelationPoly> {
        let k = lambda.norm() as usize;
        if basis.len() < k {
            return Err(Error::Input(alloc::format!("basis needs {k} classes")));
        }
        for (i, c) in basis.iter().enumerate().take(k) {
            if c.norm() as usize != i + 1 {
                return Err(Error::Input(alloc::format!("basis class {c} should have norm {}", i + 1)));
            }
        }
        // tilde[i] expresses t_(i+2) in basis variables
        let mut tilde: Vec<RelationPoly> = Vec::with_capacity(k);
        for (i, ci) in basis.iter().enumerate().take(k) {
            let cycle = Partition::cycle(i as u32 + 2);
            if *ci == cycle {
                tilde.push(RelationPoly::var(cycle));
                continue;
            }
            let t = self.t_poly(ci)?;
            let lead = t.coefficients_in(&cycle);
            if lead.len() != 2 {
                return Err(Error::Internal(alloc::format!("T_{ci} not linear in t_{cycle}")));
            }
            let coeff = lead[1]
                .leading_term()
                .filter(|(m, _)| m.is_one() && lead[1].len() == 1)
                .map(|(_, c)| c.clone())
                .ok_or_else(|| Error::Internal(alloc::format!("non-scalar t_{cycle} coefficient in T_{ci}")))?;
            let rest = substitute_cycles(&lead[0], &tilde);
            let value = (&RelationPoly::var(ci.clone()) - &rest).scale(&coeff.inv()?);
            tilde.push(value);
        }
        Ok(substitute_cycles(&self.t_poly(lambda)?, &tilde))
    }
}

fn substitute_cycles(p: &RelationPoly, tilde: &[RelationPoly]) -> RelationPoly {
    let mut out = p.clone();
    for (i, value) in tilde.iter().enumerate().rev() {
        let cycle = Partition::cycle(i as u32 + 2);
        if *value != RelationPoly::var(cycle.clone()) {
            out = out.substitute(&cycle, value);
        }
    }
    out
}

/// Degree, weight and support constraints every term of `T_lambda` obeys.
pub fn check_structure(lambda: &Partition, t: &RelationPoly) -> Result<()> {
    let k = lambda.norm();
    let s = lambda.supp();
    let cycle = Partition::cycle(k + 1);
    let mut top_terms = 0;
    for (m, c) in t.terms() {
        let fail = |what: &str| {
            Err(Error::Internal(alloc::format!("T_{lambda}: term {m:?} violates {what}")))
        };
        if c.valuation_at_infinity().is_some_and(|v| v > 0) {
            return fail("the coefficient degree bound");
        }
        let mut weight = 0;
        let mut supp = 0;
        for (v, e) in m.factors() {
            if !v.is_cycle() {
                return fail("cycle-only variables");
            }
            weight += v.norm() * e;
            supp += v.supp() * e;
        }
        if weight > k || (k - weight) % 2 == 1 {
            return fail("the norm weight bound");
        }
        if supp > s {
            return fail("the support bound");
        }
        if m.degree_in(&cycle) > 0 {
            top_terms += 1;
        }
    }
    if top_terms != 1 {
        return Err(Error::Internal(alloc::format!(
            "T_{lambda} has {top_terms} terms in t_{cycle}"
        )));
    }
    Ok(())
}

/// The coefficient of `t_(k+1)` in `T_lambda`, `k = norm(lambda)`:
/// `(-1)^(1 + #parts) (supp - 1)! prod(parts) / ((k + 1)! prod_{i=k+1}^{supp-1} (N - i))`.
pub fn leading_cycle_coeff(lambda: &Partition) -> Result<RationalFunction> {
    let k = lambda.norm();
    if k == 0 {
        return Err(Error::Input(alloc::string::String::from("identity has no leading cycle")));
    }
    let s = lambda.supp();
    let sign: i64 = if (1 + lambda.parts().len()).is_multiple_of(2) { 1 } else { -1 };
    let prod: BigInt = lambda.parts().iter().map(|&p| BigInt::from(p)).product();
    let num = BigInt::from(sign) * factorial(s - 1) * prod;
    let c = BigRational::new(num, factorial(k + 1));
    let den = UniPoly::from_roots((k + 1..s).map(i64::from));
    RationalFunction::new(UniPoly::constant(c), den)
}

/// The coefficient of `t_(norm+1)` actually produced by the builder.
pub fn extract_leading_cycle_coeff(t: &RelationPoly, lambda: &Partition) -> RationalFunction {
    t.coeff(&Monomial::var(Partition::cycle(lambda.norm() + 1)))
}

/// Assignment `t_c -> rho_shape(c)` for every class `c` in `vars`.
pub fn ratio_assignment(
    oracle: &mut MnOracle,
    shape: &YoungDiagram,
    vars: &[Partition],
) -> Result<BTreeMap<Partition, BigRational>> {
    vars.iter()
        .map(|c| Ok((c.clone(), oracle.ratio(shape, c)?)))
        .collect()
}

/// Evaluates `p` at the normalized values of `chi_shape`.
pub fn eval_at_character(oracle: &mut MnOracle, shape: &YoungDiagram, p: &RelationPoly) -> Result<BigRational> {
    let vars = p.variables();
    if vars.iter().any(|v| v.supp() > shape.n()) {
        return Err(Error::Domain(alloc::format!("variables of {p} exceed S_{}", shape.n())));
    }
    let a = ratio_assignment(oracle, shape, &vars)?;
    p.eval(i64::from(shape.n()), &a)
}

/// True when `p` vanishes at the normalized values of `chi_shape`.
pub fn vanishes_at(oracle: &mut MnOracle, shape: &YoungDiagram, p: &RelationPoly) -> Result<bool> {
    Ok(eval_at_character(oracle, shape, p)?.is_zero())
}

/// Basis `C_i = (p, i + 2 - p)` for `i >= p - 1`, cycles below.
pub fn defect_zero_basis(p: u32, k: u32) -> Vec<Partition> {
    (1..=k)
        .map(|i| {
            if i + 1 < p {
                Partition::cycle(i + 1)
            } else {
                Partition::from_parts(&[p, i + 2 - p])
            }
        })
        .collect()
}
