//! Buchberger's algorithm over `Q(N)` with lex order on class variables, and
//! the ideals generated by the relations plus prescribed zeros.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{Monomial, RationalFunction, RelationPoly};
use crate::error::{Error, Result};
use crate::partition::{classes_with_norm_at_most, Partition};
use crate::relation::TBuilder;
use crate::BigRational;

/// Full normal form of `f` with respect to `basis`.
pub fn reduce(f: &RelationPoly, basis: &[RelationPoly]) -> RelationPoly {
    let leads: Vec<(Monomial, RationalFunction)> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut p = f.clone();
    let mut rem = RelationPoly::zero();
    while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (lm, lc))| m.div(lm).map(|q| (i, q, lc)));
        match hit {
            Some((i, q, lc)) => {
                let factor = c.div(lc).expect("leading coefficients are nonzero");
                p = &p - &basis[i].mul_term(&factor, &q);
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    rem
}

fn s_poly(f: &RelationPoly, g: &RelationPoly) -> RelationPoly {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&cf.inv().expect("nonzero"), &l.div(mf).expect("lcm"));
    let b = g.mul_term(&cg.inv().expect("nonzero"), &l.div(mg).expect("lcm"));
    &a - &b
}

/// Statistics of one basis computation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
}

/// Reduced Gröbner basis, monic, sorted by increasing leading monomial.
pub fn buchberger(gens: &[RelationPoly]) -> Vec<RelationPoly> {
    buchberger_with_stats(gens).0
}

pub fn buchberger_with_stats(gens: &[RelationPoly]) -> (Vec<RelationPoly>, BuchbergerStats) {
    let mut stats = BuchbergerStats::default();
    let mut g: Vec<RelationPoly> = Vec::new();
    for f in gens {
        let r = reduce(f, &g);
        if !r.is_zero() {
            g.push(r.monic());
        }
    }
    if g.iter().any(|p| p.leading_monomial().is_some_and(Monomial::is_one)) {
        return (alloc::vec![RelationPoly::one()], stats);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let lm = |p: &RelationPoly| p.leading_monomial().expect("nonzero").clone();
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = lm(&g[a.0]).lcm(&lm(&g[a.1]));
                let lb = lm(&g[b.0]).lcm(&lm(&g[b.1]));
                la.cmp(&lb).then(a.cmp(b))
            })
            .expect("non-empty");
        pairs.remove(&(i, j));
        let (li, lj) = (lm(&g[i]), lm(&g[j]));
        if li.is_coprime(&lj) {
            stats.skipped_coprime += 1;
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lm(&g[k]).divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        stats.pairs_reduced += 1;
        let r = reduce(&s_poly(&g[i], &g[j]), &g);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.leading_monomial().is_some_and(Monomial::is_one) {
            return (alloc::vec![RelationPoly::one()], stats);
        }
        let idx = g.len();
        g.push(r);
        for k in 0..idx {
            pairs.insert((k, idx));
        }
    }
    (interreduce(g), stats)
}

fn interreduce(g: Vec<RelationPoly>) -> Vec<RelationPoly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<RelationPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let m = p.leading_monomial().expect("nonzero");
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let mq = q.leading_monomial().expect("nonzero");
            j != i && mq.divides(m) && (mq != m || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<RelationPoly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (m, c) = keep[i].leading_term().expect("nonzero");
        let tail = &keep[i] - &RelationPoly::term(c.clone(), m.clone());
        let reduced = &RelationPoly::term(c.clone(), m.clone()) + &reduce(&tail, &others);
        out.push(reduced.monic());
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

/// True when `f` lies in the ideal spanned by the Gröbner basis `basis`.
pub fn is_member(f: &RelationPoly, basis: &[RelationPoly]) -> bool {
    reduce(f, basis).is_zero()
}

/// The ideal of relations among classes of norm at most `cap` together with
/// the zeros prescribed by `vanishing`.
#[derive(Clone, Debug)]
pub struct ZeroSetIdeal {
    pub cap: u32,
    pub vanishing: Vec<Partition>,
    pub generators: Vec<RelationPoly>,
}

impl ZeroSetIdeal {
    pub fn new(builder: &mut TBuilder, cap: u32, vanishing: &[Partition]) -> Result<Self> {
        let mut vanishing = vanishing.to_vec();
        vanishing.sort();
        vanishing.dedup();
        if let Some(bad) = vanishing.iter().find(|c| c.is_identity() || c.norm() > cap) {
            return Err(Error::Input(alloc::format!("class {bad} outside 1 <= norm <= {cap}")));
        }
        let mut generators = Vec::new();
        for lambda in classes_with_norm_at_most(cap) {
            if !lambda.is_cycle() {
                generators.push(builder.relation(&lambda)?);
            }
        }
        for c in &vanishing {
            generators.push(RelationPoly::var(c.clone()));
        }
        Ok(ZeroSetIdeal {
            cap,
            vanishing,
            generators,
        })
    }

    pub fn basis(&self) -> Vec<RelationPoly> {
        buchberger(&self.generators)
    }
}

/// How one univariate basis element constrains a character vanishing on the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `t^k`: the character also vanishes at this class.
    ForcedZero { class: Partition, power: u32 },
    /// `t - r`: the normalized value is forced.
    Linear { class: Partition, value: RationalFunction },
    /// `t^2 - f/g` (possibly times a power of `t`); `omega_square` is
    /// `|class|^2 f/g`, the square of the central character value.
    Square {
        class: Partition,
        zero_power: u32,
        value: RationalFunction,
        omega_square: RationalFunction,
    },
    /// Any other factor, as a monic polynomial in `y = |class| t` with
    /// coefficients in `Q(x)`, listed from the constant term up.
    Curve {
        class: Partition,
        zero_power: u32,
        model: Vec<RationalFunction>,
    },
}

impl Constraint {
    pub fn class(&self) -> &Partition {
        match self {
            Constraint::ForcedZero { class, .. }
            | Constraint::Linear { class, .. }
            | Constraint::Square { class, .. }
            | Constraint::Curve { class, .. } => class,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Constraint::ForcedZero { class, power: 1 } => alloc::format!("t_{class} = 0"),
            Constraint::ForcedZero { class, power } => alloc::format!("t_{class}^{power} = 0"),
            Constraint::Linear { class, value } => alloc::format!("t_{class} = {value}"),
            Constraint::Square {
                class, omega_square, ..
            } => alloc::format!("t_{class} = 0 or omega_{class}^2 = {omega_square}"),
            Constraint::Curve { class, model, .. } => {
                alloc::format!("t_{class} = 0 or {}", render_curve(model))
            }
        }
    }
}

/// `y^d + c_{d-1} y^{d-1} + .. + c_0` with `N` written as `x`.
pub fn render_curve(model: &[RationalFunction]) -> String {
    let mut out = String::new();
    for (i, c) in model.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative_leading();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = mag.render().replace('N', "x");
        let multi = mag.num().coeffs().iter().filter(|a| !a.is_zero()).count() > 1 || !mag.is_polynomial();
        let y = match i {
            0 => String::new(),
            1 => String::from("y"),
            _ => alloc::format!("y^{i}"),
        };
        if i == 0 {
            out.push_str(&coeff);
        } else if mag.is_one() {
            out.push_str(&y);
        } else if multi {
            out.push_str(&alloc::format!("({coeff}){y}"));
        } else {
            out.push_str(&alloc::format!("{coeff}{y}"));
        }
    }
    out
}

/// Coefficients of `p` as a polynomial in the single variable `class`.
fn univariate_coeffs(p: &RelationPoly, class: &Partition) -> Vec<RationalFunction> {
    p.coefficients_in(class)
        .into_iter()
        .map(|c| match c.leading_term() {
            None => RationalFunction::zero(),
            Some((_, v)) => v.clone(),
        })
        .collect()
}

/// Classifies a basis element involving a single variable.
pub fn classify(p: &RelationPoly) -> Option<Constraint> {
    let vars = p.variables();
    if vars.len() != 1 {
        return None;
    }
    let class = vars[0].clone();
    let coeffs = univariate_coeffs(p, &class);
    let zero_power = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let rest = &coeffs[zero_power..];
    let degree = rest.len() - 1;
    if degree == 0 {
        return Some(Constraint::ForcedZero {
            class,
            power: zero_power as u32,
        });
    }
    let lead = rest[degree].clone();
    let rest: Vec<RationalFunction> = rest.iter().map(|c| c.div(&lead).expect("nonzero lead")).collect();
    if degree == 1 && zero_power == 0 {
        return Some(Constraint::Linear {
            class,
            value: -&rest[0],
        });
    }
    let size: RationalFunction = class.class_size_poly().into();
    if degree == 2 && rest[1].is_zero() {
        let value = -&rest[0];
        let omega_square = &(&size * &size) * &value;
        return Some(Constraint::Square {
            class,
            zero_power: zero_power as u32,
            value,
            omega_square,
        });
    }
    // substitute t = y / |class| and scale by |class|^degree
    let mut model = Vec::with_capacity(degree + 1);
    let mut pow = RationalFunction::one();
    for i in (0..=degree).rev() {
        model.push(&rest[i] * &pow);
        pow = &pow * &size;
    }
    model.reverse();
    Some(Constraint::Curve {
        class,
        zero_power: zero_power as u32,
        model,
    })
}

/// Result of analyzing a set of prescribed zeros.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub cap: u32,
    pub vanishing: Vec<Partition>,
    pub basis: Vec<RelationPoly>,
    pub inconsistent: bool,
    pub constraints: Vec<Constraint>,
}

impl AnalysisReport {
    pub fn forced_zeros(&self) -> Vec<Partition> {
        self.constraints
            .iter()
            .filter_map(|c| match c {
                Constraint::ForcedZero { class, .. } => Some(class.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn contains(&self, p: &RelationPoly) -> bool {
        self.basis.iter().any(|b| b == p)
    }
}

pub fn analyze_zero_set(builder: &mut TBuilder, vanishing: &[Partition], cap: u32) -> Result<AnalysisReport> {
    let ideal = ZeroSetIdeal::new(builder, cap, vanishing)?;
    let basis = ideal.basis();
    let inconsistent = basis.len() == 1 && basis[0].is_one();
    let constraints = if inconsistent {
        Vec::new()
    } else {
        basis.iter().filter_map(classify).collect()
    };
    Ok(AnalysisReport {
        cap,
        vanishing: ideal.vanishing,
        basis,
        inconsistent,
        constraints,
    })
}

/// True when `a / b` is the square of a nonzero rational constant.
pub fn same_square_class(a: &RationalFunction, b: &RationalFunction) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let q = a.div(b).expect("nonzero");
    if !q.is_constant() {
        return false;
    }
    let c = q.num().coeff(0);
    is_rational_square(&c)
}

pub fn is_rational_square(c: &BigRational) -> bool {
    use num_traits::Signed;
    if c.is_negative() {
        return false;
    }
    let (n, d) = (c.numer(), c.denom());
    let rn = n.sqrt();
    let rd = d.sqrt();
    &(&rn * &rn) == n && &(&rd * &rd) == d
}

/// The element `t^a (t^2 + c)` for a class variable `t`.
pub fn square_condition_element(class: &Partition, zero_power: u32, c: RationalFunction) -> RelationPoly {
    let t = RelationPoly::var(class.clone());
    let q = &t.pow(2) + &RelationPoly::constant(c);
    &t.pow(zero_power) * &q
}
