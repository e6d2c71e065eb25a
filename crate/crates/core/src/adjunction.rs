//! Fine and classical adjoint polytopes, the Fine Q-codegree, the Fine
//! core with its core normals, and natural projections.
//!
//! The Fine adjoint `P^{F(s)}` is defined by infinitely many inequalities
//! `<a, x> >= min_P <a, .> + s`, one per nonzero lattice functional `a`.
//! Only the primitive lattice points of the convex hull of the facet
//! normals matter, and those form the finite [`RelevantSystem`]. Multiples
//! `k a` with `k >= 2` are implied by `a` whenever `s > 0`, and the origin
//! gives the vacuous `0 >= s`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactla::{
    self, dot_int_rat, int_rat, lattice_quotient_basis, solve_lp, IntMatrix, IntVector,
    LinearProgram, RatVector, Rational, Relation, Sense,
};
use crate::polytope::{HalfSpace, Polytope};
use crate::{Error, Result};

/// Exact minimum of `<a, x>` over `P`.
pub fn support_value(p: &Polytope, a: &[BigInt]) -> Result<Rational> {
    if a.len() != p.ambient_dim() {
        return Err(Error::DimensionMismatch("functional length".into()));
    }
    p.min_of(a).ok_or(Error::EmptyPolytope)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Facet,
    /// A lattice point of the facet-normal hull that is not a facet normal.
    Extra,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevantInequality {
    /// Offset is the tight support value `min_P <a, .>`.
    pub halfspace: HalfSpace,
    pub provenance: Provenance,
}

/// The finite family of valid inequalities that determines every Fine
/// adjoint of a full-dimensional polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevantSystem {
    base: Polytope,
    inequalities: Vec<RelevantInequality>,
}

impl RelevantSystem {
    pub fn base(&self) -> &Polytope {
        &self.base
    }

    pub fn inequalities(&self) -> &[RelevantInequality] {
        &self.inequalities
    }

    pub fn halfspaces(&self) -> impl Iterator<Item = &HalfSpace> {
        self.inequalities.iter().map(|i| &i.halfspace)
    }

    pub fn normals(&self) -> Vec<IntVector> {
        self.halfspaces().map(|h| h.normal.clone()).collect()
    }

    /// Halfspaces shifted inward by `s`.
    pub fn shifted(&self, s: &Rational) -> Vec<HalfSpace> {
        self.halfspaces().map(|h| h.shifted(s)).collect()
    }

    /// Keeps exactly the relevant inequalities: those whose removal changes
    /// `P^{F(s)}` for some `s > 0`. Facet inequalities always are.
    ///
    /// An extra `(a, b)` is relevant iff some `(x, s)` with `0 <= s <= s*`
    /// satisfies all other shifted inequalities but `<a, x> - s < b`, a
    /// single LP. Allowing `s = 0` is harmless since the LP value is
    /// continuous on `[0, s*]`. Each extra is tested against the full
    /// system, so the result does not depend on the order.
    pub fn pruned(&self) -> Result<RelevantSystem> {
        let s_star = max_shift(self.base.ambient_dim(), self.halfspaces())?;
        Ok(self.pruned_at(&s_star))
    }

    fn pruned_at(&self, s_star: &Rational) -> RelevantSystem {
        let kept = self
            .inequalities
            .iter()
            .enumerate()
            .filter(|(i, q)| q.provenance == Provenance::Facet || self.is_relevant(*i, s_star))
            .map(|(_, q)| q.clone())
            .collect();
        RelevantSystem { base: self.base.clone(), inequalities: kept }
    }

    fn is_relevant(&self, index: usize, s_star: &Rational) -> bool {
        let n = self.base.ambient_dim();
        let target = &self.inequalities[index].halfspace;
        let with_shift = |a: &[BigInt], c: i64| {
            let mut row = a.to_vec();
            row.push(BigInt::from(c));
            row
        };
        let mut constraints: Vec<(IntVector, Rational)> = self
            .halfspaces()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, h)| (with_shift(&h.normal, -1), h.offset.clone()))
            .collect();
        let zeros = vec![BigInt::zero(); n];
        constraints.push((with_shift(&zeros, 1), Rational::zero()));
        constraints.push((with_shift(&zeros, -1), -s_star.clone()));
        let mut objective: RatVector = target.normal.iter().map(int_rat).collect();
        objective.push(-Rational::one());
        let result = solve_lp(&constraints, &objective, Sense::Minimize);
        match result.optimum {
            Some(v) => v < target.offset,
            None => result.is_feasible(),
        }
    }
}

/// All primitive nonzero lattice points of the facet-normal hull, each with
/// its tight support value.
pub fn relevant_system(p: &Polytope) -> Result<RelevantSystem> {
    p.require_full_dimensional()?;
    let facet_normals: Vec<IntVector> = p.facets().iter().map(|h| h.normal.clone()).collect();
    let normal_hull = Polytope::from_int_vertices(&facet_normals)?;
    let mut inequalities = Vec::new();
    for a in normal_hull.lattice_points(false) {
        if !exactla::gcd_of(&a).is_one() {
            continue;
        }
        let provenance = if facet_normals.contains(&a) { Provenance::Facet } else { Provenance::Extra };
        let offset = support_value(p, &a)?;
        inequalities.push(RelevantInequality { halfspace: HalfSpace { normal: a, offset }, provenance });
    }
    Ok(RelevantSystem { base: p.clone(), inequalities })
}

fn require_nonnegative(s: &Rational) -> Result<()> {
    if s.is_negative() {
        Err(Error::NegativeParameter(s.to_string()))
    } else {
        Ok(())
    }
}

/// `P^{F(s)}`: the points at lattice distance at least `s` from every valid
/// inequality. May be empty or lower-dimensional.
pub fn fine_adjoint(p: &Polytope, s: &Rational) -> Result<Polytope> {
    require_nonnegative(s)?;
    p.require_full_dimensional()?;
    if s.is_zero() {
        return Ok(p.clone());
    }
    fine_adjoint_of_system(&relevant_system(p)?, s)
}

pub fn fine_adjoint_of_system(system: &RelevantSystem, s: &Rational) -> Result<Polytope> {
    require_nonnegative(s)?;
    if s.is_zero() {
        return Ok(system.base.clone());
    }
    Polytope::from_halfspaces(system.base.ambient_dim(), &system.shifted(s))
}

/// `P^{(s)}`: the same construction over the facet inequalities only.
pub fn classical_adjoint(p: &Polytope, s: &Rational) -> Result<Polytope> {
    require_nonnegative(s)?;
    p.require_full_dimensional()?;
    if s.is_zero() {
        return Ok(p.clone());
    }
    let shifted: Vec<HalfSpace> = p.facets().iter().map(|h| h.shifted(s)).collect();
    Polytope::from_halfspaces(p.ambient_dim(), &shifted)
}

/// Largest `s` with `{<a, x> >= b + s}` nonempty, by one LP in `(x, s)`.
fn max_shift<'a>(n: usize, halfspaces: impl Iterator<Item = &'a HalfSpace>) -> Result<Rational> {
    let constraints: Vec<(IntVector, Rational)> = halfspaces
        .map(|h| {
            let mut row = h.normal.clone();
            row.push(-BigInt::one());
            (row, h.offset.clone())
        })
        .collect();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = Rational::one();
    let result = solve_lp(&constraints, &objective, Sense::Maximize);
    let s = result.optimum.ok_or_else(|| Error::invariant(format!("shift LP ended {:?}", result.status)))?;
    if !s.is_positive() {
        return Err(Error::invariant("full-dimensional polytope admits no positive shift"));
    }
    Ok(s)
}

/// Classical Q-codegree `mu(P)`.
pub fn mu_classical(p: &Polytope) -> Result<Rational> {
    p.require_full_dimensional()?;
    Ok(max_shift(p.ambient_dim(), p.facets().iter())?.recip())
}

pub fn classical_core(p: &Polytope) -> Result<Polytope> {
    let s = mu_classical(p)?.recip();
    classical_adjoint(p, &s)
}

/// Fine Q-codegree `mu^F(P) = 1 / s*`.
pub fn mu_fine(p: &Polytope) -> Result<Rational> {
    Ok(FineAdjunction::compute(p)?.mu_fine())
}

pub fn fine_core(p: &Polytope) -> Result<Polytope> {
    Ok(FineAdjunction::compute(p)?.core)
}

pub fn fine_core_normals(p: &Polytope) -> Result<Vec<IntVector>> {
    Ok(FineAdjunction::compute(p)?.core_normals)
}

/// `A_core^F`, the convex hull of the Fine core normals in the dual space.
pub fn a_core(p: &Polytope) -> Result<Polytope> {
    FineAdjunction::compute(p)?.a_core()
}

/// Fine adjunction data of one full-dimensional polytope.
#[derive(Debug, Clone)]
pub struct FineAdjunction {
    pub system: RelevantSystem,
    /// `1 / mu^F`, the largest `s` with a nonempty Fine adjoint.
    pub s_star: Rational,
    pub core: Polytope,
    /// Normals of relevant inequalities tight at offset `b + s*` on the
    /// whole Fine core. Extras implied at every level never count.
    pub core_normals: Vec<IntVector>,
}

impl FineAdjunction {
    pub fn compute(p: &Polytope) -> Result<Self> {
        let system = relevant_system(p)?;
        Self::from_system(system)
    }

    pub fn from_system(system: RelevantSystem) -> Result<Self> {
        let n = system.base.ambient_dim();
        let s_star = max_shift(n, system.halfspaces())?;
        let core = fine_adjoint_of_system(&system, &s_star)?;
        let relevant = system.pruned_at(&s_star);
        if core.is_empty() {
            return Err(Error::invariant("Fine core is empty at the optimal shift"));
        }
        // Tightness at every vertex is tightness on the whole core.
        let mut core_normals: Vec<IntVector> = relevant
            .halfspaces()
            .filter(|h| {
                let level = &h.offset + &s_star;
                core.vertices().iter().all(|y| dot_int_rat(&h.normal, y) == level)
            })
            .map(|h| h.normal.clone())
            .collect();
        core_normals.sort();
        Ok(FineAdjunction { system, s_star, core, core_normals })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.system.base
    }

    pub fn mu_fine(&self) -> Rational {
        self.s_star.recip()
    }

    pub fn a_core(&self) -> Result<Polytope> {
        Polytope::from_int_vertices(&self.core_normals)
    }

    pub fn adjoint(&self, s: &Rational) -> Result<Polytope> {
        fine_adjoint_of_system(&self.system, s)
    }

    /// Direction vectors spanning `K(P)`, the linear space parallel to the
    /// affine hull of the Fine core.
    pub fn core_directions(&self) -> Vec<RatVector> {
        let verts = self.core.vertices();
        verts[1..].iter().map(|v| exactla::sub_rat(v, &verts[0])).collect()
    }

    pub fn natural_projection(&self) -> Result<NaturalProjection> {
        let p = self.polytope();
        let n = p.ambient_dim();
        let k = usize::try_from(self.core.dim()).expect("core is nonempty");
        let matrix = lattice_quotient_basis(&self.core_directions(), n, k)?;
        let projected = p.map_linear(&matrix)?;
        let image_core = self.core.map_linear(&matrix)?;
        let projected_adjunction = FineAdjunction::compute(&projected)?;
        Ok(NaturalProjection {
            kernel_dim: k,
            mu_preserved: projected_adjunction.mu_fine() == self.mu_fine(),
            core_is_point: projected_adjunction.core.dim() == 0
                && projected_adjunction.core == image_core,
            matrix,
            projected_core: projected_adjunction.core,
            projected,
        })
    }

    /// Structural facts about `A_core^F`: the origin is a relative interior
    /// point, its vertices are exactly the core normals, and it has no other
    /// relative interior lattice point.
    pub fn a_core_check(&self) -> Result<ACoreCheck> {
        let a_core = self.a_core()?;
        let n = self.polytope().ambient_dim();
        let origin = vec![Rational::zero(); n];
        let origin_in_relint = a_core.contains(&origin)
            && a_core.facets().iter().all(|h| h.slack(&origin).is_positive());
        let core_normals_as_points: Vec<RatVector> =
            self.core_normals.iter().map(|a| exactla::to_rat_vec(a)).collect();
        let vertices_are_core_normals = a_core.vertices() == core_normals_as_points.as_slice();
        let relint_lattice_points = a_core.lattice_points(true);
        Ok(ACoreCheck { origin_in_relint, vertices_are_core_normals, relint_lattice_points })
    }

    /// The core normals positively span `K(P)^⊥`; when the core is a point
    /// the region `{y : <a_i, y> >= b_i}` over the core normals is a
    /// polytope containing `P`.
    pub fn check_core_normal_spanning(&self) -> Result<CoreNormalSpanning> {
        let p = self.polytope();
        let n = p.ambient_dim();
        let directions = self.core_directions();
        let orthogonal = self.core_normals.iter().all(|a| {
            directions.iter().all(|d| dot_int_rat(a, d).is_zero())
        });
        let normals_rat: Vec<RatVector> = self.core_normals.iter().map(|a| exactla::to_rat_vec(a)).collect();
        let k = usize::try_from(self.core.dim()).expect("nonempty core");
        let spans_complement = exactla::rank(&normals_rat) == n - k;

        // Positive spanning of their own span: some combination with all
        // coefficients >= 1 vanishes.
        let m = self.core_normals.len();
        let mut lp = LinearProgram::new(m);
        for i in 0..m {
            let mut row = vec![Rational::zero(); m];
            row[i] = Rational::one();
            lp.add_constraint(row, Relation::Ge, Rational::one());
        }
        for coord in 0..n {
            lp.add_constraint(
                self.core_normals.iter().map(|a| int_rat(&a[coord])).collect(),
                Relation::Eq,
                Rational::zero(),
            );
        }
        let positively_spanning = m > 0 && lp.solve().is_feasible();

        let bounded_cover = if self.core.dim() == 0 {
            let halfspaces: Vec<HalfSpace> = self
                .system
                .halfspaces()
                .filter(|h| self.core_normals.contains(&h.normal))
                .cloned()
                .collect();
            Some(match Polytope::from_halfspaces(n, &halfspaces) {
                Ok(region) => !region.is_empty() && p.is_subset_of(&region),
                Err(Error::Unbounded) => false,
                Err(e) => return Err(e),
            })
        } else {
            None
        };
        Ok(CoreNormalSpanning {
            positively_spans: orthogonal && spans_complement && positively_spanning,
            bounded_cover,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ACoreCheck {
    pub origin_in_relint: bool,
    pub vertices_are_core_normals: bool,
    pub relint_lattice_points: Vec<IntVector>,
}

impl ACoreCheck {
    /// All three properties hold; the origin is the only relative interior
    /// lattice point.
    pub fn holds(&self) -> bool {
        self.origin_in_relint
            && self.vertices_are_core_normals
            && self.relint_lattice_points.len() == 1
            && self.relint_lattice_points[0].iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreNormalSpanning {
    pub positively_spans: bool,
    /// Present only when the Fine core is a single point.
    pub bounded_cover: Option<bool>,
}

impl CoreNormalSpanning {
    pub fn holds(&self) -> bool {
        self.positively_spans && self.bounded_cover.unwrap_or(true)
    }
}

/// `π_P : R^n -> R^n / K(P)` realized as a lattice-surjective integer matrix.
#[derive(Debug, Clone)]
pub struct NaturalProjection {
    pub matrix: IntMatrix,
    pub kernel_dim: usize,
    pub projected: Polytope,
    pub projected_core: Polytope,
    /// `mu^F(π(P)) = mu^F(P)`
    pub mu_preserved: bool,
    /// The Fine core of the image is the single point `π(core^F(P))`.
    pub core_is_point: bool,
}

pub fn natural_projection(p: &Polytope) -> Result<NaturalProjection> {
    FineAdjunction::compute(p)?.natural_projection()
}

/// Everything the Fine theory attaches to one polytope.
#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub mu_fine: Rational,
    pub s_star: Rational,
    pub fine_core: Polytope,
    pub fine_core_normals: Vec<IntVector>,
    pub a_core_polytope: Polytope,
    pub natural_projection: NaturalProjection,
}

pub fn adjunction_report(p: &Polytope) -> Result<AdjunctionReport> {
    let adj = FineAdjunction::compute(p)?;
    Ok(AdjunctionReport {
        mu_fine: adj.mu_fine(),
        s_star: adj.s_star.clone(),
        a_core_polytope: adj.a_core()?,
        natural_projection: adj.natural_projection()?,
        fine_core: adj.core,
        fine_core_normals: adj.core_normals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, rat, rat_vec};
    use crate::harness::corpus;

    fn poly(pts: &[RatVector]) -> Polytope {
        Polytope::from_vertices(pts).unwrap()
    }

    #[test]
    fn support_value_examples() {
        let sq = corpus::unit_square();
        assert_eq!(support_value(&sq, &int_vec(&[1, 1])).unwrap(), rat(0, 1));
        assert_eq!(support_value(&sq, &int_vec(&[-1, -1])).unwrap(), rat(-2, 1));
        assert_eq!(support_value(&corpus::hexagon(), &int_vec(&[-1, -1])).unwrap(), rat(-3, 1));
        assert!(matches!(support_value(&Polytope::empty(2), &int_vec(&[1, 0])), Err(Error::EmptyPolytope)));
    }

    #[test]
    fn relevant_system_of_square_is_its_facets() {
        let sys = relevant_system(&corpus::unit_square()).unwrap();
        assert_eq!(sys.inequalities().len(), 4);
        assert!(sys.inequalities().iter().all(|i| i.provenance == Provenance::Facet));
    }

    #[test]
    fn relevant_system_of_delta_2_2_has_one_extra() {
        let sys = relevant_system(&corpus::delta(2, 2)).unwrap();
        let extras: Vec<&HalfSpace> = sys
            .inequalities()
            .iter()
            .filter(|i| i.provenance == Provenance::Extra)
            .map(|i| &i.halfspace)
            .collect();
        assert_eq!(extras, vec![&HalfSpace { normal: int_vec(&[0, -1]), offset: rat(-1, 1) }]);
        assert_eq!(sys.inequalities().len(), 4);
    }

    #[test]
    fn relevant_system_of_hexagon_scans_the_dual_hexagon() {
        let sys = relevant_system(&corpus::hexagon()).unwrap();
        let mut normals = sys.normals();
        normals.sort();
        // dual hexagon conv{(±2,±1),(0,±1)}: 12 nonzero lattice points, all primitive
        let mut expected: Vec<IntVector> = [
            [-2, -1], [-2, 1], [-1, -1], [-1, 0], [-1, 1], [0, -1], [0, 1],
            [1, -1], [1, 0], [1, 1], [2, -1], [2, 1],
        ]
        .iter()
        .map(|v| int_vec(v))
        .collect();
        expected.sort();
        assert_eq!(normals, expected);
        let facets = sys.inequalities().iter().filter(|i| i.provenance == Provenance::Facet).count();
        assert_eq!(facets, 6);
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(fine_adjoint(&corpus::square(3), &rat(1, 1)).unwrap(), corpus::square(1).translate(&rat_vec(&[1, 1])).unwrap());
        let octagon = poly(&[
            vec![rat(1, 1), rat(3, 2)],
            vec![rat(-1, 1), rat(3, 2)],
            vec![rat(1, 1), rat(-3, 2)],
            vec![rat(-1, 1), rat(-3, 2)],
            vec![rat(3, 2), rat(1, 2)],
            vec![rat(3, 2), rat(-1, 2)],
            vec![rat(-3, 2), rat(1, 2)],
            vec![rat(-3, 2), rat(-1, 2)],
        ]);
        assert_eq!(fine_adjoint(&corpus::hexagon(), &rat(1, 2)).unwrap(), octagon);
        let hex = corpus::hexagon();
        assert_eq!(fine_adjoint(&hex, &rat(0, 1)).unwrap(), hex);
        assert!(matches!(fine_adjoint(&hex, &rat(-1, 2)), Err(Error::NegativeParameter(_))));
        assert!(fine_adjoint(&hex, &rat(3, 1)).unwrap().is_empty());
    }

    #[test]
    fn classical_examples() {
        assert_eq!(mu_classical(&corpus::delta(2, 4)).unwrap(), rat(3, 2));
        let sq = corpus::unit_square();
        assert_eq!(mu_classical(&sq).unwrap(), rat(2, 1));
        assert_eq!(classical_core(&sq).unwrap(), poly(&[vec![rat(1, 2), rat(1, 2)]]));
    }

    #[test]
    fn mu_fine_examples() {
        for n in 1..=3 {
            assert_eq!(mu_fine(&corpus::standard_simplex(n)).unwrap(), rat(n as i64 + 1, 1));
        }
        for n in 2..=3 {
            for a in 2..=4 {
                assert_eq!(mu_fine(&corpus::delta(n, a)).unwrap(), rat(n as i64, 1));
            }
        }
        assert_eq!(mu_fine(&corpus::hexagon()).unwrap(), rat(1, 2));
        // segments: mu^F([0, k]) = 2 / k
        for k in 1..=4 {
            let seg = poly(&[rat_vec(&[0]), rat_vec(&[k])]);
            assert_eq!(mu_fine(&seg).unwrap(), rat(2, k));
        }
    }

    #[test]
    fn hexagon_core_data() {
        let adj = FineAdjunction::compute(&corpus::hexagon()).unwrap();
        assert_eq!(adj.core, poly(&[rat_vec(&[0, 0])]));
        assert_eq!(
            adj.core_normals,
            vec![int_vec(&[-1, 0]), int_vec(&[0, -1]), int_vec(&[0, 1]), int_vec(&[1, 0])]
        );
        assert_eq!(adj.a_core().unwrap(), corpus::cross_polytope(2));
        assert!(adj.a_core_check().unwrap().holds());
    }

    #[test]
    fn wide_triangle_core_is_a_segment() {
        let core = fine_core(&corpus::wide_triangle()).unwrap();
        assert_eq!(core, poly(&[vec![rat(-1, 2), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]]));
    }

    #[test]
    fn tall_wedge_core() {
        let p = corpus::tall_wedge();
        let core = fine_core(&p).unwrap();
        // (1,1,4) is at lattice distance 1 from every functional in [-12,12]^3
        let expected = poly(&[rat_vec(&[1, 1, 1]), rat_vec(&[1, 1, 4]), rat_vec(&[1, 2, 1]), rat_vec(&[1, 2, 4])]);
        assert_eq!(core, expected);
        let classical = classical_core(&p).unwrap();
        let third = |k| rat(k, 3);
        assert_eq!(
            classical,
            poly(&[vec![third(4), third(4), third(4)], vec![third(4), third(4), third(6)]])
        );
        assert!(core.vertices().iter().all(|v| !classical.contains(v)));
        assert_eq!(mu_classical(&p).unwrap(), rat(3, 4));
    }

    #[test]
    fn natural_projection_examples() {
        let hex = natural_projection(&corpus::hexagon()).unwrap();
        assert_eq!(hex.kernel_dim, 0);
        assert_eq!(hex.projected, corpus::hexagon());
        assert!(hex.mu_preserved && hex.core_is_point);

        let wedge = natural_projection(&corpus::tall_wedge()).unwrap();
        assert_eq!(wedge.matrix, vec![int_vec(&[1, 0, 0])]);
        assert_eq!(wedge.projected, poly(&[rat_vec(&[0]), rat_vec(&[2])]));
        assert_eq!(mu_fine(&wedge.projected).unwrap(), rat(1, 1));
        assert!(wedge.mu_preserved && wedge.core_is_point);

        let tri = natural_projection(&corpus::wide_triangle()).unwrap();
        assert_eq!(tri.matrix, vec![int_vec(&[0, 1])]);
        assert_eq!(tri.projected, poly(&[rat_vec(&[0]), rat_vec(&[1])]));
        assert_eq!(tri.projected_core.dim(), 0);
    }

    #[test]
    fn core_normal_spanning_examples() {
        for p in [corpus::hexagon(), corpus::unit_square(), corpus::tall_wedge()] {
            let check = FineAdjunction::compute(&p).unwrap().check_core_normal_spanning().unwrap();
            assert!(check.holds(), "{check:?}");
        }
        let wedge = FineAdjunction::compute(&corpus::tall_wedge()).unwrap();
        assert_eq!(wedge.core_normals, vec![int_vec(&[-1, 0, 0]), int_vec(&[1, 0, 0])]);
        let hex = FineAdjunction::compute(&corpus::hexagon()).unwrap();
        assert_eq!(hex.check_core_normal_spanning().unwrap().bounded_cover, Some(true));
    }

    #[test]
    fn implied_extras_are_not_core_normals() {
        // reflexive pentagon: (-1, 0) and (0, -1) are midpoints of facet normals
        let p = Polytope::from_int_vertices(
            &[[-1, -1], [-1, 0], [0, -1], [0, 1], [1, 0]].iter().map(|v| int_vec(v)).collect::<Vec<_>>(),
        )
        .unwrap();
        let sys = relevant_system(&p).unwrap();
        assert_eq!(sys.inequalities().len(), 7);
        assert_eq!(sys.pruned().unwrap().inequalities().len(), 5);
        let adj = FineAdjunction::compute(&p).unwrap();
        assert_eq!(adj.core_normals.len(), 5);
        assert!(adj.a_core_check().unwrap().holds());
    }

    #[test]
    fn pruning_keeps_facets_and_preserves_adjoints() {
        for (name, p) in corpus::named_2d() {
            let sys = relevant_system(&p).unwrap();
            let pruned = sys.pruned().unwrap();
            assert!(pruned.inequalities().len() <= sys.inequalities().len());
            let facets = |s: &RelevantSystem| s.inequalities().iter().filter(|i| i.provenance == Provenance::Facet).count();
            assert_eq!(facets(&pruned), facets(&sys), "{name}");
            let adj = FineAdjunction::from_system(sys.clone()).unwrap();
            for s in [adj.s_star.clone() / rat(3, 1), adj.s_star.clone()] {
                assert_eq!(
                    fine_adjoint_of_system(&sys, &s).unwrap(),
                    fine_adjoint_of_system(&pruned, &s).unwrap(),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn lower_dimensional_input_is_rejected() {
        let seg = poly(&[rat_vec(&[0, 0]), rat_vec(&[1, 1])]);
        assert!(matches!(relevant_system(&seg), Err(Error::NotFullDimensional { .. })));
        assert!(matches!(mu_fine(&seg), Err(Error::NotFullDimensional { .. })));
    }
}
