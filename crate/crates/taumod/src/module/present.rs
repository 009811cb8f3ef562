//! Presentations S^g → M and Fitting ideals.
//!
//! Generators are chosen greedily in basis order (or a caller-supplied
//! order, used to test presentation independence); relations are
//! S-generators of the kernel of the surjection. Fitting ideals are
//! ideals of minors of the relation matrix, canonicalized as row-reduced
//! subspaces so equality is bit-exact.

use super::TauModule;
use crate::algebra::{AlgVec, IdealSubspace, SMat};
use crate::field::Fq;
use crate::linalg::{Mat, Subspace};

#[derive(Debug, Clone)]
pub struct Presentation {
    /// Indices of the standard basis vectors chosen as S-generators.
    pub gens: Vec<usize>,
    /// n × g·d_S matrix of the surjection S^g → M.
    pub surjection: Mat,
    /// A section of the surjection: g·d_S × n with surjection·lift = id.
    pub lift: Mat,
    /// g × r relation matrix over S; its columns S-generate ker(surjection).
    pub rel: SMat,
    /// τ on generators: τ(m_i) = Σ_j tau_on_gens[j][i] · m_j.
    pub tau_on_gens: SMat,
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn relation_count(&self) -> usize {
        self.rel.cols()
    }

    /// Read a vector of S^g out of a flat 𝔽_q-vector.
    pub fn chunks(v: &[Fq], ds: usize) -> Vec<AlgVec> {
        v.chunks(ds).map(|c| c.to_vec()).collect()
    }
}

/// Greedy presentation; `order` overrides the scan order of candidate
/// generators (used to exercise presentation independence).
pub fn compute_presentation(module: &TauModule, order: Option<&[usize]>) -> Presentation {
    let field = module.base().clone();
    let ts = module.parent().clone();
    let ds = ts.dim();
    let n = module.dim();
    let default_order: Vec<usize> = (0..n).collect();
    let scan: &[usize] = order.unwrap_or(&default_order);

    // greedy S-generators
    let mut span = Subspace::zero(n);
    let mut gens: Vec<usize> = Vec::new();
    for &j in scan {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        if span.contains(&field, &e) {
            continue;
        }
        gens.push(j);
        // close under the S-action
        span.insert(&field, &e);
        loop {
            let mut grew = false;
            let current: Vec<Vec<Fq>> = (0..span.dim()).map(|i| span.basis_vector(i)).collect();
            for v in &current {
                for s in 0..ds {
                    grew |= span.insert(&field, &module.act(s).apply(&field, v));
                }
            }
            if !grew {
                break;
            }
        }
        if span.dim() == n {
            break;
        }
    }
    assert!(span.dim() == n || n == 0, "generator scan must exhaust the module");
    let g = gens.len();

    // surjection S^g → M on the basis (slot i, e_k)
    let mut surjection = Mat::zeros(n, g * ds);
    for (i, &gen) in gens.iter().enumerate() {
        let mut e = vec![field.zero(); n];
        e[gen] = field.one();
        for k in 0..ds {
            let img = module.act(k).apply(&field, &e);
            for r in 0..n {
                surjection[(r, i * ds + k)] = img[r];
            }
        }
    }
    // a section: column j solves surjection·v = e_j
    let mut lift = Mat::zeros(g * ds, n);
    for j in 0..n {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        let sol = surjection.solve(&field, &e).expect("surjection must be onto");
        for r in 0..g * ds {
            lift[(r, j)] = sol[r];
        }
    }

    // S-generators of the kernel
    let kernel = surjection.kernel(&field);
    let mut rel_cols: Vec<Vec<AlgVec>> = Vec::new();
    if !kernel.is_empty() {
        let act_on_sg: Vec<Mat> = (0..ds)
            .map(|s| {
                Mat::identity(&field, g).kron(&field, ts.s().left_mul_basis_matrix(s))
            })
            .collect();
        let mut closed = Subspace::zero(g * ds);
        for v in &kernel {
            if closed.contains(&field, v) {
                continue;
            }
            rel_cols.push(Presentation::chunks(v, ds));
            closed.insert(&field, v);
            loop {
                let mut grew = false;
                let current: Vec<Vec<Fq>> =
                    (0..closed.dim()).map(|i| closed.basis_vector(i)).collect();
                for w in &current {
                    for a in &act_on_sg {
                        grew |= closed.insert(&field, &a.apply(&field, w));
                    }
                }
                if !grew {
                    break;
                }
            }
        }
    }
    let r = rel_cols.len();
    let mut rel = SMat::zeros(ts.s(), g, r);
    for (c, col) in rel_cols.iter().enumerate() {
        for (i, entry) in col.iter().enumerate() {
            rel.set(i, c, entry.clone());
        }
    }

    // τ on generators through the section
    let mut tau_on_gens = SMat::zeros(ts.s(), g, g);
    for (i, &gen) in gens.iter().enumerate() {
        let mut e = vec![field.zero(); n];
        e[gen] = field.one();
        let img = module.apply_tau(&e);
        let pre = lift.apply(&field, &img);
        for (j, chunk) in Presentation::chunks(&pre, ds).into_iter().enumerate() {
            tau_on_gens.set(j, i, chunk);
        }
    }

    Presentation { gens, surjection, lift, rel, tau_on_gens }
}

/// Fitt_n(M): the ideal of (g−n)-minors of the relation matrix, with
/// Fitt_n = S for n ≥ g and Fitt_n = 0 when the required minor size
/// exceeds the matrix.
pub fn fitting_ideal(module: &TauModule, n: usize) -> IdealSubspace {
    fitting_ideal_from(module, module.presentation(), n)
}

pub fn fitting_ideal_from(module: &TauModule, pres: &Presentation, n: usize) -> IdealSubspace {
    let s = module.parent().s();
    let g = pres.generator_count();
    if n >= g {
        return IdealSubspace::unit(s);
    }
    let k = g - n;
    let minors = pres.rel.minors(s, k);
    if minors.is_empty() {
        return IdealSubspace::zero(s);
    }
    IdealSubspace::from_generators(s, &minors)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::{unit_object, TauModule};
    use super::*;
    use crate::algebra::ideal_extend;

    #[test]
    fn free_module_has_no_relations() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let pres = one.presentation();
        assert_eq!(pres.generator_count(), 1);
        assert_eq!(pres.relation_count(), 0);
        // coker(rel) has the right dimension
        assert_eq!(pres.surjection.rank(ts.base()), ts.dim());
    }

    #[test]
    fn cyclic_quotient_relations_span_the_ideal() {
        let ts = dual_number_base();
        let m = quotient_by_x_module(&ts);
        let pres = m.presentation();
        assert_eq!(pres.generator_count(), 1);
        // relations = (x) ⊂ S as 1×r matrix; the S-span of the entries is (x)
        let entries: Vec<_> = (0..pres.relation_count())
            .map(|c| pres.rel.at(0, c).clone())
            .collect();
        let ideal = crate::algebra::IdealSubspace::from_generators(ts.s(), &entries);
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        let expected = crate::algebra::IdealSubspace::principal(ts.s(), &x);
        assert_eq!(ideal, expected);
    }

    #[test]
    fn fitting_of_free_modules() {
        let ts = nonreduced_lambda_base();
        let one = unit_object(&ts);
        // rank 1 free: Fitt_0 = 0, Fitt_1 = S
        assert!(fitting_ideal(&one, 0).is_zero());
        assert!(fitting_ideal(&one, 1).is_unit_ideal());
    }

    #[test]
    fn fitting_of_cyclic_quotient_is_the_annihilator() {
        let ts = dual_number_base();
        let m = quotient_by_x_module(&ts);
        let f0 = fitting_ideal(&m, 0);
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        assert_eq!(f0, crate::algebra::IdealSubspace::principal(ts.s(), &x));
        assert!(fitting_ideal(&m, 1).is_unit_ideal());
    }

    #[test]
    fn fitting_is_presentation_independent() {
        let ts = dual_number_base();
        let m = quotient_by_x_module(&ts);
        let pres_fwd = compute_presentation(&m, None);
        let order: Vec<usize> = (0..m.dim()).rev().collect();
        let pres_rev = compute_presentation(&m, Some(&order));
        for n in 0..3 {
            assert_eq!(
                fitting_ideal_from(&m, &pres_fwd, n),
                fitting_ideal_from(&m, &pres_rev, n)
            );
        }
    }

    #[test]
    fn worked_fitting_example_extends_from_lambda() {
        // Λ = F_2[t]/(t²), R = F_4, M = (Λ/(t))⊗R with τ = F:
        // Fitt_0 = (t)·S = extension of (t)
        let ts = nonreduced_lambda_base();
        let field = ts.base();
        // M = S/(t): dim 2 (basis = image of 1⊗1, 1⊗g)
        // act: t acts by zero, F_4 part acts through itself; τ = induced F
        let x_ideal = {
            let t = ts.lambda_to_s(&ts.lambda().basis_elem(1));
            crate::algebra::IdealSubspace::principal(ts.s(), &t)
        };
        let quot = crate::linalg::QuotientSpace::from_subspace(x_ideal.space().clone());
        let acts: Vec<Mat> = (0..ts.dim())
            .map(|s| {
                let amb = ts.s().left_mul_basis_matrix(s);
                quot.induced(field, amb)
            })
            .collect();
        let tau = quot.induced(field, ts.frob_matrix());
        let m = TauModule::new(ts.clone(), acts, tau, "(Λ/(t))⊗R").unwrap();
        assert!(m.is_unit());
        let f0 = fitting_ideal(&m, 0);
        let t_lambda = crate::algebra::IdealSubspace::principal(
            ts.lambda(),
            &ts.lambda().basis_elem(1),
        );
        assert_eq!(f0, ideal_extend(&ts, &t_lambda));
    }
}
