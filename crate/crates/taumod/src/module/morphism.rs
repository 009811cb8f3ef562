//! Morphisms of τ-modules: S-linear, τ-equivariant maps. Hom spaces are
//! solved through presentations (images of the S-generators subject to
//! relation and τ constraints), which keeps the linear systems small.

use super::{Presentation, TauModule};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::rng::Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: TauModule,
    target: TauModule,
    mat: Mat,
}

impl ModuleMorphism {
    pub fn new(source: TauModule, target: TauModule, mat: Mat) -> Result<ModuleMorphism> {
        if source.parent() != target.parent() {
            return Err(Error::NotAMorphism("source and target live over different S".into()));
        }
        if mat.rows() != target.dim() || mat.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                mat.rows(),
                mat.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let field = source.base();
        for s in 0..source.parent().dim() {
            let lhs = mat.matmul(field, source.act(s));
            let rhs = target.act(s).matmul(field, &mat);
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!("not S-linear against e{}", s)));
            }
        }
        let lhs = mat.matmul(field, source.tau());
        let rhs = target.tau().matmul(field, &mat);
        if lhs != rhs {
            return Err(Error::NotAMorphism("does not intertwine tau".into()));
        }
        Ok(ModuleMorphism { source, target, mat })
    }

    pub(crate) fn new_unchecked(source: TauModule, target: TauModule, mat: Mat) -> ModuleMorphism {
        debug_assert!(
            ModuleMorphism::new(source.clone(), target.clone(), mat.clone()).is_ok(),
            "internally constructed morphism failed validation"
        );
        ModuleMorphism { source, target, mat }
    }

    pub fn identity(m: &TauModule) -> ModuleMorphism {
        ModuleMorphism {
            source: m.clone(),
            target: m.clone(),
            mat: Mat::identity(m.base(), m.dim()),
        }
    }

    pub fn zero(source: &TauModule, target: &TauModule) -> ModuleMorphism {
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            mat: Mat::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &TauModule {
        &self.source
    }

    pub fn target(&self) -> &TauModule {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.mat.is_invertible(self.source.base())
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let inv = self.mat.inverse(self.source.base())?;
        Some(ModuleMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            mat: inv,
        })
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(other.target, self.source, "composition mismatch");
        ModuleMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            mat: self.mat.matmul(self.source.base(), &other.mat),
        }
    }

    pub fn add(&self, other: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.add(self.source.base(), &other.mat),
        }
    }

    pub fn scale(&self, c: Fq) -> ModuleMorphism {
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.scale(self.source.base(), c),
        }
    }
}

/// 𝔽_q-basis of Hom(M, N) in the τ-module category.
pub fn hom_space(m: &TauModule, n: &TauModule) -> Vec<ModuleMorphism> {
    assert_eq!(m.parent(), n.parent(), "hom over mismatched base algebras");
    let field = m.base().clone();
    let ts = m.parent().clone();
    let ds = ts.dim();
    if m.dim() == 0 || n.dim() == 0 {
        return Vec::new();
    }
    let pres = m.presentation();
    let g = pres.generator_count();
    let r = pres.relation_count();
    let nn = n.dim();

    // unknowns: y_i = image of generator i, stacked into g·nn coordinates
    let rows = (r + g) * nn;
    let mut sys = Mat::zeros(rows, g * nn);
    // relation constraints: Σ_i act_N(rel[i][c]) y_i = 0
    for c in 0..r {
        for i in 0..g {
            let block = n.act_vec(pres.rel.at(i, c));
            for br in 0..nn {
                for bc in 0..nn {
                    sys[(c * nn + br, i * nn + bc)] = block[(br, bc)];
                }
            }
        }
    }
    // τ constraints: τ_N y_i − Σ_j act_N(T[j][i]) y_j = 0
    for i in 0..g {
        for j in 0..g {
            let mut block = n.act_vec(pres.tau_on_gens.at(j, i)).scale(&field, field.neg(field.one()));
            if i == j {
                block = block.add(&field, n.tau());
            }
            for br in 0..nn {
                for bc in 0..nn {
                    sys[((r + i) * nn + br, j * nn + bc)] = block[(br, bc)];
                }
            }
        }
    }

    let kernel = sys.kernel(&field);
    let mut out = Vec::with_capacity(kernel.len());
    for y in kernel {
        // reconstruct the full matrix from generator images via the section
        let mut mat = Mat::zeros(nn, m.dim());
        for col in 0..m.dim() {
            let mut e = vec![field.zero(); m.dim()];
            e[col] = field.one();
            let pre = pres.lift.apply(&field, &e);
            let chunks = Presentation::chunks(&pre, ds);
            let mut img = vec![field.zero(); nn];
            for (i, x) in chunks.iter().enumerate() {
                let yi = &y[i * nn..(i + 1) * nn];
                let part = n.act_on(x, yi);
                for (o, p) in img.iter_mut().zip(part) {
                    *o = field.add(*o, p);
                }
            }
            for row in 0..nn {
                mat[(row, col)] = img[row];
            }
        }
        out.push(ModuleMorphism::new_unchecked(m.clone(), n.clone(), mat));
    }
    out
}

/// Kernel with its canonical inclusion.
pub fn kernel(alpha: &ModuleMorphism) -> (TauModule, ModuleMorphism) {
    let field = alpha.source.base().clone();
    let m = &alpha.source;
    let ker = alpha.mat.kernel(&field);
    let sub = Subspace::from_spanning(&field, &ker, m.dim());
    let k = sub.dim();
    let ds = m.parent().dim();
    let mut acts = Vec::with_capacity(ds);
    for s in 0..ds {
        let mut a = Mat::zeros(k, k);
        for j in 0..k {
            let img = m.act(s).apply(&field, &sub.basis_vector(j));
            let coords = sub
                .coords(&field, &img)
                .expect("kernel is S-stable by linearity");
            for i in 0..k {
                a[(i, j)] = coords[i];
            }
        }
        acts.push(a);
    }
    let mut tau = Mat::zeros(k, k);
    for j in 0..k {
        let img = m.apply_tau(&sub.basis_vector(j));
        let coords = sub
            .coords(&field, &img)
            .expect("kernel is τ-stable by equivariance");
        for i in 0..k {
            tau[(i, j)] = coords[i];
        }
    }
    let module = TauModule::new_unchecked(
        m.parent().clone(),
        acts,
        tau,
        format!("ker({})", alpha_label(alpha)),
        None,
    );
    let incl = Mat::from_fn(m.dim(), k, |r, c| sub.basis_vector(c)[r]);
    let inclusion = ModuleMorphism::new_unchecked(module.clone(), m.clone(), incl);
    (module, inclusion)
}

/// Cokernel with its canonical projection.
pub fn cokernel(alpha: &ModuleMorphism) -> (TauModule, ModuleMorphism) {
    let field = alpha.target.base().clone();
    let n = &alpha.target;
    let image_rows: Vec<Vec<Fq>> = (0..alpha.mat.cols()).map(|j| alpha.mat.col(j)).collect();
    let quot = QuotientSpace::new(&field, &image_rows, n.dim());
    let ds = n.parent().dim();
    let acts: Vec<Mat> = (0..ds).map(|s| quot.induced(&field, n.act(s))).collect();
    let tau = quot.induced(&field, n.tau());
    let module = TauModule::new_unchecked(
        n.parent().clone(),
        acts,
        tau,
        format!("coker({})", alpha_label(alpha)),
        None,
    );
    let proj = quot.projection_matrix(&field);
    let projection = ModuleMorphism::new_unchecked(n.clone(), module.clone(), proj);
    (module, projection)
}

fn alpha_label(alpha: &ModuleMorphism) -> String {
    format!("{}→{}", alpha.source.label(), alpha.target.label())
}

/// Nilpotent kernel and nilpotent cokernel: the maps crystals invert.
pub fn is_nil_isomorphism(alpha: &ModuleMorphism) -> bool {
    let (ker, _) = kernel(alpha);
    let (coker, _) = cokernel(alpha);
    ker.is_nilpotent() && coker.is_nilpotent()
}

/// The S-submodule generated by the given vectors, with its inclusion.
/// The span is closed under the action and must be τ-stable (it is for
/// spans of the form ideal·M or images of morphisms).
pub fn submodule(m: &TauModule, vectors: &[Vec<Fq>]) -> (TauModule, ModuleMorphism) {
    let field = m.base().clone();
    let sub = m.s_span(vectors);
    let k = sub.dim();
    let ds = m.parent().dim();
    let mut acts = Vec::with_capacity(ds);
    for s in 0..ds {
        let mut a = Mat::zeros(k, k);
        for j in 0..k {
            let img = m.act(s).apply(&field, &sub.basis_vector(j));
            let coords = sub.coords(&field, &img).expect("span is S-closed");
            for i in 0..k {
                a[(i, j)] = coords[i];
            }
        }
        acts.push(a);
    }
    let mut tau = Mat::zeros(k, k);
    for j in 0..k {
        let img = m.apply_tau(&sub.basis_vector(j));
        let coords = sub
            .coords(&field, &img)
            .expect("submodule must be τ-stable");
        for i in 0..k {
            tau[(i, j)] = coords[i];
        }
    }
    let module = TauModule::new_unchecked(
        m.parent().clone(),
        acts,
        tau,
        format!("sub({})", m.label()),
        None,
    );
    let incl = Mat::from_fn(m.dim(), k, |r, c| sub.basis_vector(c)[r]);
    let inclusion = ModuleMorphism::new_unchecked(module.clone(), m.clone(), incl);
    (module, inclusion)
}

pub struct DirectSum {
    pub module: TauModule,
    pub inject_left: ModuleMorphism,
    pub inject_right: ModuleMorphism,
    pub project_left: ModuleMorphism,
    pub project_right: ModuleMorphism,
}

pub fn direct_sum(m: &TauModule, n: &TauModule) -> DirectSum {
    assert_eq!(m.parent(), n.parent());
    let field = m.base().clone();
    let (dm, dn) = (m.dim(), n.dim());
    let d = dm + dn;
    let block = |a: &Mat, b: &Mat| -> Mat {
        let mut out = Mat::zeros(d, d);
        for i in 0..dm {
            for j in 0..dm {
                out[(i, j)] = a[(i, j)];
            }
        }
        for i in 0..dn {
            for j in 0..dn {
                out[(dm + i, dm + j)] = b[(i, j)];
            }
        }
        out
    };
    let ds = m.parent().dim();
    let acts: Vec<Mat> = (0..ds).map(|s| block(m.act(s), n.act(s))).collect();
    let tau = block(m.tau(), n.tau());
    let module = TauModule::new_unchecked(
        m.parent().clone(),
        acts,
        tau,
        format!("{}⊕{}", m.label(), n.label()),
        None,
    );
    let il = Mat::from_fn(d, dm, |r, c| {
        if r == c {
            field.one()
        } else {
            field.zero()
        }
    });
    let ir = Mat::from_fn(d, dn, |r, c| {
        if r == dm + c {
            field.one()
        } else {
            field.zero()
        }
    });
    let pl = il.transpose();
    let pr = ir.transpose();
    DirectSum {
        inject_left: ModuleMorphism::new_unchecked(m.clone(), module.clone(), il),
        inject_right: ModuleMorphism::new_unchecked(n.clone(), module.clone(), ir),
        project_left: ModuleMorphism::new_unchecked(module.clone(), m.clone(), pl),
        project_right: ModuleMorphism::new_unchecked(module.clone(), n.clone(), pr),
        module,
    }
}

/// Search Hom(M, N) for an isomorphism. Exhaustive over the coefficient
/// space when it is small, seeded random sampling (then a greedy sweep)
/// otherwise. None means no isomorphism was found within the budget —
/// callers that have a theorem guaranteeing existence treat that as a
/// verification failure.
pub fn find_isomorphism(m: &TauModule, n: &TauModule, seed: u64) -> Option<ModuleMorphism> {
    if m.dim() != n.dim() {
        return None;
    }
    if m.dim() == 0 {
        return Some(ModuleMorphism::zero(m, n));
    }
    let field = m.base().clone();
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return None;
    }
    let t = homs.len();
    let q = field.order();
    let total = (q as u128).checked_pow(t as u32);
    if let Some(total) = total.filter(|&total| total <= 4096) {
        for code in 1..total {
            let mut c = code;
            let mut acc = Mat::zeros(n.dim(), m.dim());
            for h in homs.iter() {
                let coef = Fq((c % q as u128) as u32);
                c /= q as u128;
                if !coef.is_zero() {
                    acc = acc.add(&field, &h.matrix().scale(&field, coef));
                }
            }
            if acc.is_invertible(&field) {
                return Some(ModuleMorphism::new_unchecked(m.clone(), n.clone(), acc));
            }
        }
        return None;
    }
    let mut rng = Rng::from_seed(seed);
    for _ in 0..10_000 {
        let mut acc = Mat::zeros(n.dim(), m.dim());
        for h in homs.iter() {
            let coef = rng.element(&field);
            if !coef.is_zero() {
                acc = acc.add(&field, &h.matrix().scale(&field, coef));
            }
        }
        if acc.is_invertible(&field) {
            return Some(ModuleMorphism::new_unchecked(m.clone(), n.clone(), acc));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::unit_object;
    use super::*;

    #[test]
    fn identity_is_a_morphism_and_an_iso() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let id = ModuleMorphism::identity(&one);
        assert!(id.is_isomorphism());
        let (k, _) = kernel(&id);
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let z = ModuleMorphism::zero(&one, &one);
        let (k, incl) = kernel(&z);
        assert_eq!(k.dim(), one.dim());
        assert!(!incl.is_zero());
        let (c, _) = cokernel(&z);
        assert_eq!(c.dim(), one.dim());
    }

    #[test]
    fn end_of_unit_object_has_lambda_dimension() {
        // Hom(1,1) ≅ Λ as 𝔽_q-spaces when R is connected
        let ts = nonreduced_lambda_base();
        let one = unit_object(&ts);
        let homs = hom_space(&one, &one);
        assert_eq!(homs.len(), ts.lambda().dim());
    }

    #[test]
    fn hom_reconstruction_gives_valid_morphisms() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        for h in hom_space(&one, &one) {
            // re-validate through the public constructor
            ModuleMorphism::new(h.source().clone(), h.target().clone(), h.matrix().clone())
                .unwrap();
        }
    }

    #[test]
    fn hom_from_unit_to_nilpotent_vanishes() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        let mut c = crate::algebra::SMat::zeros(ts.s(), 1, 1);
        c.set(0, 0, x);
        let nil = TauModule::new_free(ts.clone(), c, "nil");
        assert!(hom_space(&one, &nil).is_empty());
    }

    #[test]
    fn direct_sum_projections_are_sections() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let sum = direct_sum(&one, &one);
        let comp = sum.project_left.compose(&sum.inject_left);
        assert_eq!(comp.matrix(), ModuleMorphism::identity(&one).matrix());
        let cross = sum.project_right.compose(&sum.inject_left);
        assert!(cross.is_zero());
    }

    #[test]
    fn nil_isomorphism_examples() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        // identity is a nil-isomorphism; the zero map between nonzero
        // unit modules is not
        assert!(is_nil_isomorphism(&ModuleMorphism::identity(&one)));
        assert!(!is_nil_isomorphism(&ModuleMorphism::zero(&one, &one)));
        // inclusion x·M ⊂ M for the nilpotent example: kernel zero,
        // cokernel nilpotent
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        let mut c = crate::algebra::SMat::zeros(ts.s(), 1, 1);
        c.set(0, 0, x.clone());
        let nil = TauModule::new_free(ts.clone(), c, "nil");
        let x_vec = {
            let mat = nil.act_vec(&x);
            (0..nil.dim()).map(|j| mat.col(j)).collect::<Vec<_>>()
        };
        let (_, incl) = submodule(&nil, &x_vec);
        assert!(is_nil_isomorphism(&incl));
    }

    #[test]
    fn iso_search_finds_the_identity_class() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let iso = find_isomorphism(&one, &one, 3).expect("1 ≅ 1");
        assert!(iso.is_isomorphism());
    }
}
