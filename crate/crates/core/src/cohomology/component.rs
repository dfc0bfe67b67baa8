//! Graded components `H^s_Q(M)_j` as modules over `S0`.
//!
//! `H^n_Q(S(-a,-b))_j` is free over `S0` on the symbols `z^c` with `|c| = -n-j+b`, each in
//! degree `a`. A bihomogeneous map between free `S`-modules induces a map between these
//! free `S0`-modules: an entry `g = Σ g_β y^β` sends `z^c` to `Σ_{β ≤ c} g_β z^{c-β}`.
//! Applying this to a bigraded free resolution of `M` gives a complex whose homology at
//! position `n - s` is `H^s_Q(M)_j`.

use std::collections::{BTreeMap, HashMap};

use super::ideal::{BigradedIdeal, BigradedModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{binomial, Matrix};
use crate::poly::{monomials_of_degree, Bidegree, Monomial, RingSpec, P};
use crate::resolution::{homology_presentation, minimal_resolution, FreeResolution, GradedPresentation};

/// Number of `c ∈ N^n` with `|c| = -n-j+b`.
pub fn z_count(j: i64, n: usize, b: i64) -> usize {
    assert!(n >= 1);
    let size = -(n as i64) - j + b;
    if size < 0 {
        0
    } else {
        binomial(size + n as i64 - 1, n as i64 - 1) as usize
    }
}

/// The exponents `c` with `|c| = -n-j+b`, in lex-descending order.
pub fn z_exponents(j: i64, n: usize, b: i64) -> Vec<Monomial> {
    let size = -(n as i64) - j + b;
    if size < 0 {
        Vec::new()
    } else {
        monomials_of_degree(n, size as u32)
    }
}

/// A basis symbol `e_i z^c` of `H^n_Q(F)_j`. `summand` is `None` for the copy of `S` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZBasisElement {
    pub c: Monomial,
    pub summand: Option<usize>,
    pub x_shift: i64,
}

/// How a component was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Cokernel of the map induced by the generators of the ideal.
    TopPresentation,
    /// Homology of the complex induced by a minimal bigraded resolution.
    InducedComplex,
}

#[derive(Clone, Debug)]
pub struct CohomologyComponent<F: Field> {
    pub s: usize,
    pub j: i64,
    pub presentation: GradedPresentation<F>,
    pub provenance: Provenance,
}

impl<F: Field> CohomologyComponent<F> {
    pub fn is_zero(&self) -> bool {
        self.presentation.is_zero()
    }
}

/// The free `S0`-module map induced in y-degree `j` by a bihomogeneous matrix over `S`.
pub struct InducedMap<F: Field> {
    pub matrix: Matrix<F::Elem>,
    pub rows: Vec<ZBasisElement>,
    pub cols: Vec<ZBasisElement>,
}

impl<F: Field> InducedMap<F> {
    pub fn row_degrees(&self) -> Vec<i64> {
        self.rows.iter().map(|e| e.x_shift).collect()
    }

    pub fn col_degrees(&self) -> Vec<i64> {
        self.cols.iter().map(|e| e.x_shift).collect()
    }
}

fn basis_of(j: i64, n: usize, degrees: &[Bidegree], labelled: bool) -> Vec<ZBasisElement> {
    degrees
        .iter()
        .enumerate()
        .flat_map(|(i, d)| z_exponents(j, n, d.y).into_iter().map(move |c| ZBasisElement { c, summand: labelled.then_some(i), x_shift: d.x }))
        .collect()
}

/// Map `⊕ H^n_Q(S(-cols))_j → ⊕ H^n_Q(S(-rows))_j` induced by `mat`.
pub fn induce_map<F: Field>(spec: &RingSpec<F>, mat: &Matrix<F::Elem>, rows: &[Bidegree], cols: &[Bidegree], j: i64) -> InducedMap<F> {
    let n = spec.n();
    let row_basis = basis_of(j, n, rows, true);
    let col_basis = basis_of(j, n, cols, true);
    let index: HashMap<(usize, &Monomial), usize> = row_basis.iter().enumerate().map(|(k, e)| ((e.summand.unwrap(), &e.c), k)).collect();
    // per column: (row, content coefficients of the entry)
    type Content<F> = Vec<(usize, Vec<(Monomial, P<F>)>)>;
    let content: Vec<Content<F>> =
        mat.cols().iter().map(|col| col.iter().map(|(r, g)| (*r, spec.content_coefficients(g).expect("bihomogeneous entry"))).collect()).collect();
    let mut out_cols = Vec::with_capacity(col_basis.len());
    for e in &col_basis {
        let mut entries: BTreeMap<usize, P<F>> = BTreeMap::new();
        for (r, parts) in &content[e.summand.unwrap()] {
            for (beta, g_beta) in parts {
                if let Some(rest) = e.c.div(beta) {
                    let k = index[&(*r, &rest)];
                    let slot = entries.entry(k).or_insert_with(|| spec.s0().zero());
                    *slot = spec.s0().add(slot, g_beta);
                }
            }
        }
        out_cols.push(entries.into_iter().filter(|(_, p)| !p.is_zero()).collect());
    }
    InducedMap { matrix: Matrix::from_columns(row_basis.len(), out_cols), rows: row_basis, cols: col_basis }
}

/// Presentation of `H^n_Q(S/I)_j` with rows `z^c` (degree 0) and columns `e_i z^c` (degree `a_i`).
pub fn top_component_presentation<F: Field>(ideal: &BigradedIdeal<F>, j: i64) -> CohomologyComponent<F> {
    let spec = ideal.spec();
    let module = ideal.quotient_module();
    let mut map = induce_map(spec, module.matrix(), module.row_bidegrees(), module.col_bidegrees(), j);
    map.rows.iter_mut().for_each(|e| e.summand = None);
    let presentation =
        GradedPresentation::new(spec.s0(), map.row_degrees(), map.matrix.clone(), map.col_degrees()).expect("induced entries are homogeneous");
    CohomologyComponent { s: spec.n(), j, presentation, provenance: Provenance::TopPresentation }
}

/// A minimal free resolution over `S` with the bidegree of every basis element.
#[derive(Clone, Debug)]
pub struct BigradedResolution<F: Field> {
    spec: RingSpec<F>,
    resolution: FreeResolution<F>,
    bidegrees: Vec<Vec<Bidegree>>,
}

/// Minimal bigraded free resolution of `M`, truncated after position `max_length`.
pub fn bigraded_resolution<F: Field>(module: &BigradedModule<F>, max_length: usize) -> Result<BigradedResolution<F>> {
    let spec = module.spec();
    let total = |b: &Bidegree| b.x + b.y;
    let p = GradedPresentation::new(
        spec.s(),
        module.row_bidegrees().iter().map(total).collect(),
        module.matrix().clone(),
        module.col_bidegrees().iter().map(total).collect(),
    )?;
    let resolution = minimal_resolution(&p);
    let f0 = resolution.kept_generators().iter().map(|&r| vec![module.row_bidegrees()[r].x, module.row_bidegrees()[r].y]).collect();
    let m = spec.m();
    let degs = resolution.propagate_degrees(f0, |mono| vec![mono.partial_degree(0..m) as i64, mono.partial_degree(m..mono.nvars()) as i64])?;
    let mut bidegrees: Vec<Vec<Bidegree>> = degs.into_iter().map(|v| v.into_iter().map(|d| Bidegree::new(d[0], d[1])).collect()).collect();
    bidegrees.truncate(max_length + 1);
    Ok(BigradedResolution { spec: spec.clone(), resolution, bidegrees })
}

/// A free complex `C_k → … → C_0` over `S0`; `maps[i] : C_{i+1} → C_i`.
pub struct InducedComplex<F: Field> {
    pub modules: Vec<Vec<i64>>,
    pub maps: Vec<Matrix<F::Elem>>,
}

impl<F: Field> BigradedResolution<F> {
    pub fn spec(&self) -> &RingSpec<F> {
        &self.spec
    }

    pub fn resolution(&self) -> &FreeResolution<F> {
        &self.resolution
    }

    /// Bidegrees of the basis of `F_i`.
    pub fn bidegrees(&self, i: usize) -> &[Bidegree] {
        self.bidegrees.get(i).map_or(&[], |v| v)
    }

    pub fn length(&self) -> usize {
        self.bidegrees.len() - 1
    }

    /// The complex `H^n_Q(F_•)_j`.
    pub fn induced_complex(&self, j: i64) -> InducedComplex<F> {
        let n = self.spec.n();
        let modules = (0..self.bidegrees.len()).map(|i| basis_of(j, n, &self.bidegrees[i], false).iter().map(|e| e.x_shift).collect()).collect();
        let maps = (0..self.length())
            .map(|i| induce_map(&self.spec, self.resolution.map(i).unwrap(), &self.bidegrees[i], &self.bidegrees[i + 1], j).matrix)
            .collect();
        InducedComplex { modules, maps }
    }

    /// `H^s_Q(M)_j` as the homology of the induced complex at position `n - s`.
    pub fn component(&self, s: usize, j: i64) -> Result<CohomologyComponent<F>> {
        let n = self.spec.n();
        if s > n {
            return Err(Error::InvalidArgument(format!("cohomological index {s} exceeds n = {n}")));
        }
        let pos = n - s;
        let s0 = self.spec.s0();
        let presentation = if pos > self.length() {
            GradedPresentation::zero(s0)
        } else {
            let cx = self.induced_complex(j);
            let here = &cx.modules[pos];
            let (a, below) =
                if pos == 0 { (Matrix::zero(0, here.len()), Vec::new()) } else { (cx.maps[pos - 1].clone(), cx.modules[pos - 1].clone()) };
            let (b, above) = match cx.maps.get(pos) {
                Some(m) => (m.clone(), cx.modules[pos + 1].clone()),
                None => (Matrix::zero(here.len(), 0), Vec::new()),
            };
            homology_presentation(s0, &a, &below, here, &b, &above)?
        };
        Ok(CohomologyComponent { s, j, presentation, provenance: Provenance::InducedComplex })
    }
}

/// `H^s_Q(S/I)_j`.
pub fn cohomology_component<F: Field>(ideal: &BigradedIdeal<F>, s: usize, j: i64) -> Result<CohomologyComponent<F>> {
    let spec = ideal.spec();
    bigraded_resolution(&ideal.quotient_module(), spec.m() + spec.n())?.component(s, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::resolution::minimal_resolution;

    fn spec(m: usize, n: usize) -> RingSpec<PrimeField> {
        RingSpec::new(m, n, PrimeField::default())
    }

    fn ideal(sp: &RingSpec<PrimeField>, gens: &[&str]) -> BigradedIdeal<PrimeField> {
        BigradedIdeal::parse(sp, gens).unwrap()
    }

    fn formatted(c: &CohomologyComponent<PrimeField>) -> String {
        c.presentation.format()
    }

    #[test]
    fn z_counts() {
        assert_eq!(z_count(-2, 2, 0), 1);
        assert_eq!(z_count(-3, 2, 0), 2);
        assert_eq!(z_count(-2, 3, 0), 0);
        assert_eq!(z_count(-3, 2, 1), 3);
        let c: Vec<_> = z_exponents(-4, 2, 0).iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(c, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn top_presentation_of_a_linear_form() {
        let sp = spec(2, 2);
        let i = ideal(&sp, &["x1*y1 + x2*y2"]);
        let c = top_component_presentation(&i, -2);
        assert_eq!(formatted(&c), "[x1, x2]\n");
        assert_eq!(c.presentation.col_degrees(), &[1, 1]);
        let c = top_component_presentation(&i, -3);
        assert_eq!(formatted(&c), "[x1, x2, 0]\n[0, x1, x2]\n");
    }

    #[test]
    fn top_presentation_of_monomials() {
        let sp = spec(2, 2);
        let i = ideal(&sp, &["x1*y1", "x2*y2"]);
        let c = top_component_presentation(&i, -3);
        assert_eq!(c.presentation.num_generators(), 2);
        // e_1 z^(0,2) and e_2 z^(2,0) map to zero
        let cols = c.presentation.matrix().cols();
        assert_eq!(cols.len(), 6);
        assert_eq!(cols.iter().filter(|col| col.len() == 1).count(), 4);
        assert_eq!(cols.iter().filter(|col| col.is_empty()).count(), 2);
        let expect = GradedPresentation::cyclic(sp.s0(), &[sp.parse_s0("x1").unwrap(), sp.parse_s0("x2").unwrap()]).unwrap().power(2);
        assert_eq!(c.presentation.hilbert_series(), expect.hilbert_series());
    }

    #[test]
    fn bigraded_resolutions() {
        let sp = spec(2, 2);
        let r = bigraded_resolution(&ideal(&sp, &["x1^2*y1 + x1*x2*y2"]).quotient_module(), 4).unwrap();
        assert_eq!(r.length(), 1);
        assert_eq!(r.bidegrees(1), &[Bidegree::new(2, 1)]);
        let r = bigraded_resolution(&ideal(&sp, &["x1*y1", "x2*y2"]).quotient_module(), 4).unwrap();
        assert_eq!(r.bidegrees(1), &[Bidegree::new(1, 1), Bidegree::new(1, 1)]);
        assert_eq!(r.bidegrees(2), &[Bidegree::new(2, 2)]);
        let r = bigraded_resolution(&BigradedIdeal::zero(&sp).quotient_module(), 4).unwrap();
        assert_eq!(r.length(), 0);
    }

    #[test]
    fn induced_complexes() {
        let sp = spec(2, 2);
        let i = ideal(&sp, &["x1*y1 + x2*y2"]);
        let r = bigraded_resolution(&i.quotient_module(), 4).unwrap();
        let cx = r.induced_complex(-3);
        assert_eq!(cx.maps[0], top_component_presentation(&i, -3).presentation.matrix().clone());

        let r = bigraded_resolution(&BigradedIdeal::zero(&sp).quotient_module(), 4).unwrap();
        let cx = r.induced_complex(-4);
        assert_eq!(cx.modules, vec![vec![0, 0, 0]]);

        let i = ideal(&sp, &["x1*y1", "x2*y2"]);
        let r = bigraded_resolution(&i.quotient_module(), 4).unwrap();
        let cx = r.induced_complex(-2);
        let c = r.component(2, -2).unwrap();
        assert_eq!(cx.modules[0], vec![0]);
        assert_eq!(c.presentation.hilbert_series().to_string(), "1");
    }

    #[test]
    fn components_of_a_linear_form() {
        let sp = spec(2, 2);
        let i = ideal(&sp, &["x1*y1 + x2*y2"]);
        let h1 = cohomology_component(&i, 1, -2).unwrap();
        assert_eq!(h1.presentation.row_degrees(), &[2]);
        assert!(h1.presentation.col_degrees().is_empty());
        let h2 = cohomology_component(&i, 2, -2).unwrap();
        assert_eq!(h2.presentation.hilbert_series().to_string(), "1");
        assert!(cohomology_component(&i, 2, -1).unwrap().is_zero());
        assert!(cohomology_component(&i, 0, -3).unwrap().is_zero());
        assert!(cohomology_component(&i, 3, -3).is_err());
    }

    #[test]
    fn both_constructions_agree() {
        let sp = spec(2, 2);
        for gens in [&["x1^2*y1 + x1*x2*y2"][..], &["x1*y1", "x2*y1*y2"], &["x1*y1^2 + x2*y2^2", "x1^2*y2"]] {
            let i = ideal(&sp, gens);
            for j in -5..=-1 {
                let top = top_component_presentation(&i, j).presentation;
                let via = cohomology_component(&i, 2, j).unwrap().presentation;
                assert_eq!(top.hilbert_series(), via.hilbert_series(), "{gens:?} j={j}");
                assert_eq!(minimal_resolution(&top).betti_table(), minimal_resolution(&via).betti_table(), "{gens:?} j={j}");
            }
        }
    }
}
