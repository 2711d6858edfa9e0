//! Structure-constant representations of Hopf algebras and their actors.

use super::expr::{Op, Terms};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, TensorShape};
use crate::report::Report;

/// Unital associative algebra; `mul` maps `A ⊗ A → A` (column `i*dim + j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData<F: Field> {
    pub dim: usize,
    pub mul: Matrix<F>,
    pub unit: Vec<F>,
}

/// Counital coassociative coalgebra; `comul` maps `C → C ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData<F: Field> {
    pub dim: usize,
    pub comul: Matrix<F>,
    pub counit: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData<F: Field> {
    pub algebra: AlgebraData<F>,
    pub coalgebra: CoalgebraData<F>,
    pub antipode: Matrix<F>,
    pub antipode_inv: Matrix<F>,
}

/// `action` maps `H ⊗ A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra<F: Field> {
    pub hopf: HopfAlgebraData<F>,
    pub algebra: AlgebraData<F>,
    pub action: Matrix<F>,
}

/// `action` maps `H ⊗ C → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra<F: Field> {
    pub hopf: HopfAlgebraData<F>,
    pub coalgebra: CoalgebraData<F>,
    pub action: Matrix<F>,
}

/// `coaction` maps `B → H ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra<F: Field> {
    pub hopf: HopfAlgebraData<F>,
    pub algebra: AlgebraData<F>,
    pub coaction: Matrix<F>,
}

/// `coaction` maps `Z → H ⊗ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCoalgebra<F: Field> {
    pub hopf: HopfAlgebraData<F>,
    pub coalgebra: CoalgebraData<F>,
    pub coaction: Matrix<F>,
}

/// Left module and left comodule with no compatibility assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComodule<F: Field> {
    pub hopf: HopfAlgebraData<F>,
    pub dim: usize,
    pub action: Matrix<F>,
    pub coaction: Matrix<F>,
}

/// A group-like `sigma` and a character `delta`, both dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair<F: Field> {
    pub sigma: Vec<F>,
    pub delta: Vec<F>,
}

/// `phi` maps `C ⊗ A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantPairing<F: Field> {
    pub coalg: ModuleCoalgebra<F>,
    pub alg: ModuleAlgebra<F>,
    pub phi: Matrix<F>,
}

impl<F: Field> AlgebraData<F> {
    pub fn new(dim: usize, mul: Matrix<F>, unit: Vec<F>) -> Result<Self> {
        shape(&mul, dim, dim * dim, "multiplication")?;
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has length {} for dim {dim}", unit.len())));
        }
        Ok(AlgebraData { dim, mul, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        AlgebraData { dim: 1, mul: Matrix::identity(1), unit: vec![F::one()] }
    }

    /// Builds an algebra from the products of basis elements.
    pub fn from_table(dim: usize, unit: Vec<F>, product: impl Fn(usize, usize) -> Vec<(usize, F)>) -> Self {
        let mul = Matrix::from_fn(dim, dim * dim, |c| product(c / dim, c % dim));
        AlgebraData { dim, mul, unit }
    }

    pub fn mul_op(&self) -> Op<F> {
        Op::new(self.mul.clone(), vec![self.dim, self.dim], vec![self.dim])
    }

    pub fn unit_op(&self) -> Op<F> {
        Op::vector(&self.unit)
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        self.mul.column(i * self.dim + j)
    }

    /// `A ⊗ B` with componentwise product.
    pub fn tensor(&self, other: &AlgebraData<F>) -> AlgebraData<F> {
        let (d, e) = (self.dim, other.dim);
        let shape = TensorShape::new(vec![d, e]);
        let mul = Matrix::from_fn(d * e, d * e * d * e, |c| {
            let (x, y) = (c / (d * e), c % (d * e));
            let (a, b) = (x / e, x % e);
            let (a2, b2) = (y / e, y % e);
            Terms::basis(vec![a, a2, b, b2])
                .apply(0, &self.mul_op())
                .apply(1, &other.mul_op())
                .flatten(&shape)
        });
        let unit = Terms::basis(vec![])
            .apply(0, &self.unit_op())
            .apply(1, &other.unit_op())
            .flatten(&shape);
        AlgebraData { dim: d * e, mul, unit: crate::linalg::matrix::sparse_to_dense(&unit, d * e) }
    }

    pub fn check_structure(&self) -> Report {
        let mut r = Report::new();
        let d = self.dim;
        let m = self.mul_op();
        compare_maps(&mut r, "associativity", &[d, d, d], |t| t.apply(1, &m).apply(0, &m), |t| {
            t.apply(0, &m).apply(0, &m)
        });
        let u = self.unit_op();
        compare_maps(&mut r, "left unit", &[d], |t| t.clone(), |t| t.apply(0, &u).apply(0, &m));
        compare_maps(&mut r, "right unit", &[d], |t| t.clone(), |t| t.apply(1, &u).apply(0, &m));
        r
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }
}

impl<F: Field> CoalgebraData<F> {
    pub fn new(dim: usize, comul: Matrix<F>, counit: Vec<F>) -> Result<Self> {
        shape(&comul, dim * dim, dim, "comultiplication")?;
        if counit.len() != dim {
            return Err(Error::ShapeMismatch(format!("counit has length {} for dim {dim}", counit.len())));
        }
        Ok(CoalgebraData { dim, comul, counit })
    }

    pub fn ground() -> Self {
        CoalgebraData { dim: 1, comul: Matrix::identity(1), counit: vec![F::one()] }
    }

    pub fn from_table(dim: usize, counit: Vec<F>, coproduct: impl Fn(usize) -> Vec<((usize, usize), F)>) -> Self {
        let comul = Matrix::from_fn(dim * dim, dim, |c| {
            coproduct(c).into_iter().map(|((a, b), v)| (a * dim + b, v)).collect()
        });
        CoalgebraData { dim, comul, counit }
    }

    pub fn comul_op(&self) -> Op<F> {
        Op::new(self.comul.clone(), vec![self.dim], vec![self.dim, self.dim])
    }

    pub fn counit_op(&self) -> Op<F> {
        Op::covector(&self.counit)
    }

    /// `C ⊗ D` with componentwise coproduct.
    pub fn tensor(&self, other: &CoalgebraData<F>) -> CoalgebraData<F> {
        let (d, e) = (self.dim, other.dim);
        let out = TensorShape::new(vec![d, e, d, e]);
        let comul = Matrix::from_fn(d * e * d * e, d * e, |c| {
            Terms::basis(vec![c / e, c % e])
                .apply(1, &other.comul_op())
                .apply(0, &self.comul_op())
                .permute(&[0, 2, 1, 3])
                .flatten(&out)
        });
        let counit = (0..d * e)
            .map(|c| self.counit[c / e].clone() * other.counit[c % e].clone())
            .collect();
        CoalgebraData { dim: d * e, comul, counit }
    }

    pub fn check_structure(&self) -> Report {
        let mut r = Report::new();
        let d = self.dim;
        let dl = self.comul_op();
        compare_maps(&mut r, "coassociativity", &[d], |t| t.apply(0, &dl).apply(0, &dl), |t| {
            t.apply(0, &dl).apply(1, &dl)
        });
        let e = self.counit_op();
        compare_maps(&mut r, "left counit", &[d], |t| t.clone(), |t| t.apply(0, &dl).apply(0, &e));
        compare_maps(&mut r, "right counit", &[d], |t| t.clone(), |t| t.apply(0, &dl).apply(1, &e));
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim;
        let dl = self.comul_op();
        (0..d).all(|c| {
            let t = Terms::basis(vec![c]).apply(0, &dl);
            t.permute(&[1, 0]) == t
        })
    }
}

impl<F: Field> HopfAlgebraData<F> {
    /// Builds the Hopf algebra, computing `S^{-1}` when it is not supplied.
    pub fn new(
        algebra: AlgebraData<F>,
        coalgebra: CoalgebraData<F>,
        antipode: Matrix<F>,
        antipode_inv: Option<Matrix<F>>,
    ) -> Result<Self> {
        let d = algebra.dim;
        if coalgebra.dim != d {
            return Err(Error::ShapeMismatch(format!(
                "algebra dim {d} and coalgebra dim {} differ",
                coalgebra.dim
            )));
        }
        shape(&antipode, d, d, "antipode")?;
        let antipode_inv = match antipode_inv {
            Some(m) => {
                shape(&m, d, d, "inverse antipode")?;
                m
            }
            None => antipode
                .inverse()
                .ok_or_else(|| Error::InvertibilityFailure("antipode".into()))?,
        };
        Ok(HopfAlgebraData { algebra, coalgebra, antipode, antipode_inv })
    }

    /// The ground field `k` as a Hopf algebra.
    pub fn trivial() -> Self {
        HopfAlgebraData {
            algebra: AlgebraData::ground(),
            coalgebra: CoalgebraData::ground(),
            antipode: Matrix::identity(1),
            antipode_inv: Matrix::identity(1),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn mul_op(&self) -> Op<F> {
        self.algebra.mul_op()
    }
    pub fn unit_op(&self) -> Op<F> {
        self.algebra.unit_op()
    }
    pub fn comul_op(&self) -> Op<F> {
        self.coalgebra.comul_op()
    }
    pub fn counit_op(&self) -> Op<F> {
        self.coalgebra.counit_op()
    }
    pub fn antipode_op(&self) -> Op<F> {
        Op::linear(self.antipode.clone())
    }
    pub fn antipode_inv_op(&self) -> Op<F> {
        Op::linear(self.antipode_inv.clone())
    }

    pub fn unit(&self) -> &[F] {
        &self.algebra.unit
    }

    pub fn counit(&self) -> &[F] {
        &self.coalgebra.counit
    }

    /// The unit as a single basis index, when it is one.
    pub fn unit_index(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.dim()).filter(|&i| !self.unit()[i].is_zero()).collect();
        (nz.len() == 1 && self.unit()[nz[0]].is_one()).then(|| nz[0])
    }

    /// `H ⊗ H` with the componentwise Hopf structure.
    pub fn tensor(&self, other: &HopfAlgebraData<F>) -> HopfAlgebraData<F> {
        HopfAlgebraData {
            algebra: self.algebra.tensor(&other.algebra),
            coalgebra: self.coalgebra.tensor(&other.coalgebra),
            antipode: self.antipode.kron(&other.antipode),
            antipode_inv: self.antipode_inv.kron(&other.antipode_inv),
        }
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.algebra.check_structure();
        r.merge(self.coalgebra.check_structure());
        let d = self.dim();
        let (m, u, dl, e) = (self.mul_op(), self.unit_op(), self.comul_op(), self.counit_op());
        compare_maps(&mut r, "comultiplication is multiplicative", &[d, d], |t| {
            t.apply(0, &m).apply(0, &dl)
        }, |t| {
            t.apply(1, &dl).apply(0, &dl).permute(&[0, 2, 1, 3]).apply(0, &m).apply(1, &m)
        });
        compare_maps(&mut r, "comultiplication preserves unit", &[], |t| {
            t.apply(0, &u).apply(0, &dl)
        }, |t| t.apply(0, &u).apply(1, &u));
        compare_maps(&mut r, "counit is multiplicative", &[d, d], |t| t.apply(0, &m).apply(0, &e), |t| {
            t.apply(1, &e).apply(0, &e)
        });
        compare_maps(&mut r, "counit preserves unit", &[], |t| t.apply(0, &u).apply(0, &e), |t| t.clone());
        let s = self.antipode_op();
        compare_maps(&mut r, "antipode left", &[d], |t| t.apply(0, &dl).apply(0, &s).apply(0, &m), |t| {
            t.apply(0, &e).apply(0, &u)
        });
        compare_maps(&mut r, "antipode right", &[d], |t| t.apply(0, &dl).apply(1, &s).apply(0, &m), |t| {
            t.apply(0, &e).apply(0, &u)
        });
        r.require(
            self.antipode.mul(&self.antipode_inv).is_identity()
                && self.antipode_inv.mul(&self.antipode).is_identity(),
            "antipode inverse",
            || "S S^{-1} or S^{-1} S".into(),
        );
        r
    }

    /// Whether `g` is group-like: `Δg = g ⊗ g` and `ε(g) = 1`.
    pub fn is_group_like(&self, g: &[F]) -> bool {
        let d = self.dim();
        let gv = crate::linalg::matrix::dense_to_sparse(g);
        let lhs = self.coalgebra.comul.apply(&gv);
        let shape = TensorShape::new(vec![d]);
        let gt = Terms::from_flat(&shape, &gv);
        let rhs = gt.tensor(&gt).flatten(&TensorShape::new(vec![d, d]));
        let eps = (0..d).fold(F::zero(), |a, i| a + self.counit()[i].clone() * g[i].clone());
        lhs == rhs && eps.is_one()
    }

    /// Whether `delta` is an algebra map `H → k`.
    pub fn is_character(&self, delta: &[F]) -> bool {
        let d = self.dim();
        let ev = |v: &[(usize, F)]| v.iter().fold(F::zero(), |a, (i, x)| a + delta[*i].clone() * x.clone());
        let unit = crate::linalg::matrix::dense_to_sparse(self.unit());
        if !ev(&unit).is_one() {
            return false;
        }
        (0..d).all(|i| (0..d).all(|j| ev(self.algebra.product(i, j)) == delta[i].clone() * delta[j].clone()))
    }

    /// Group-likes among the basis vectors.
    pub fn group_likes_in_basis(&self) -> Vec<Vec<F>> {
        (0..self.dim())
            .map(|i| unit_vector(self.dim(), i))
            .filter(|g| self.is_group_like(g))
            .collect()
    }

    /// Characters whose values on the basis lie in `values`.
    pub fn characters_with_values(&self, values: &[F]) -> Vec<Vec<F>> {
        let d = self.dim();
        let mut out = Vec::new();
        let total = values.len().pow(d as u32);
        for code in 0..total {
            let mut c = code;
            let mut delta = Vec::with_capacity(d);
            for _ in 0..d {
                delta.push(values[c % values.len()].clone());
                c /= values.len();
            }
            if self.is_character(&delta) {
                out.push(delta);
            }
        }
        out
    }
}

impl<F: Field> ModuleAlgebra<F> {
    pub fn new(hopf: HopfAlgebraData<F>, algebra: AlgebraData<F>, action: Matrix<F>) -> Result<Self> {
        shape(&action, algebra.dim, hopf.dim() * algebra.dim, "action")?;
        Ok(ModuleAlgebra { hopf, algebra, action })
    }

    /// `A` with `h·a = ε(h)a`.
    pub fn trivial_action(hopf: HopfAlgebraData<F>, algebra: AlgebraData<F>) -> Self {
        let action = trivial_action_matrix(&hopf, algebra.dim);
        ModuleAlgebra { hopf, algebra, action }
    }

    pub fn act_op(&self) -> Op<F> {
        Op::new(self.action.clone(), vec![self.hopf.dim(), self.algebra.dim], vec![self.algebra.dim])
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.hopf.check_structure().prefixed("hopf");
        r.merge(self.algebra.check_structure().prefixed("algebra"));
        let (h, a) = (self.hopf.dim(), self.algebra.dim);
        check_action(&mut r, &self.hopf, &self.act_op(), a);
        let (act, m, dl) = (self.act_op(), self.algebra.mul_op(), self.hopf.comul_op());
        compare_maps(&mut r, "action is multiplicative", &[h, a, a], |t| t.apply(1, &m).apply(0, &act), |t| {
            t.apply(0, &dl).permute(&[0, 2, 1, 3]).apply(0, &act).apply(1, &act).apply(0, &m)
        });
        let (u, e) = (self.algebra.unit_op(), self.hopf.counit_op());
        compare_maps(&mut r, "action preserves unit", &[h], |t| t.apply(1, &u).apply(0, &act), |t| {
            t.apply(0, &e).apply(0, &u)
        });
        r
    }
}

impl<F: Field> ModuleCoalgebra<F> {
    pub fn new(hopf: HopfAlgebraData<F>, coalgebra: CoalgebraData<F>, action: Matrix<F>) -> Result<Self> {
        shape(&action, coalgebra.dim, hopf.dim() * coalgebra.dim, "action")?;
        Ok(ModuleCoalgebra { hopf, coalgebra, action })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(hopf: HopfAlgebraData<F>) -> Self {
        ModuleCoalgebra { coalgebra: hopf.coalgebra.clone(), action: hopf.algebra.mul.clone(), hopf }
    }

    pub fn act_op(&self) -> Op<F> {
        Op::new(self.action.clone(), vec![self.hopf.dim(), self.coalgebra.dim], vec![self.coalgebra.dim])
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.hopf.check_structure().prefixed("hopf");
        r.merge(self.coalgebra.check_structure().prefixed("coalgebra"));
        let (h, c) = (self.hopf.dim(), self.coalgebra.dim);
        check_action(&mut r, &self.hopf, &self.act_op(), c);
        let (act, dl, dh) = (self.act_op(), self.coalgebra.comul_op(), self.hopf.comul_op());
        compare_maps(&mut r, "action is comultiplicative", &[h, c], |t| t.apply(0, &act).apply(0, &dl), |t| {
            t.apply(1, &dl).apply(0, &dh).permute(&[0, 2, 1, 3]).apply(0, &act).apply(1, &act)
        });
        let (ec, eh) = (self.coalgebra.counit_op(), self.hopf.counit_op());
        compare_maps(&mut r, "action preserves counit", &[h, c], |t| t.apply(0, &act).apply(0, &ec), |t| {
            t.apply(1, &ec).apply(0, &eh)
        });
        r
    }
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(hopf: HopfAlgebraData<F>, algebra: AlgebraData<F>, coaction: Matrix<F>) -> Result<Self> {
        shape(&coaction, hopf.dim() * algebra.dim, algebra.dim, "coaction")?;
        Ok(ComoduleAlgebra { hopf, algebra, coaction })
    }

    /// `B` with `b ↦ 1 ⊗ b`.
    pub fn trivial_coaction(hopf: HopfAlgebraData<F>, algebra: AlgebraData<F>) -> Self {
        let coaction = trivial_coaction_matrix(&hopf, algebra.dim);
        ComoduleAlgebra { hopf, algebra, coaction }
    }

    pub fn coact_op(&self) -> Op<F> {
        Op::new(self.coaction.clone(), vec![self.algebra.dim], vec![self.hopf.dim(), self.algebra.dim])
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.hopf.check_structure().prefixed("hopf");
        r.merge(self.algebra.check_structure().prefixed("algebra"));
        let b = self.algebra.dim;
        check_coaction(&mut r, &self.hopf, &self.coact_op(), b);
        let (rho, m, mh) = (self.coact_op(), self.algebra.mul_op(), self.hopf.mul_op());
        compare_maps(&mut r, "coaction is multiplicative", &[b, b], |t| t.apply(0, &m).apply(0, &rho), |t| {
            t.apply(1, &rho).apply(0, &rho).permute(&[0, 2, 1, 3]).apply(0, &mh).apply(1, &m)
        });
        let (u, uh) = (self.algebra.unit_op(), self.hopf.unit_op());
        compare_maps(&mut r, "unit is coinvariant", &[], |t| t.apply(0, &u).apply(0, &rho), |t| {
            t.apply(0, &uh).apply(1, &u)
        });
        r
    }
}

impl<F: Field> ComoduleCoalgebra<F> {
    pub fn new(hopf: HopfAlgebraData<F>, coalgebra: CoalgebraData<F>, coaction: Matrix<F>) -> Result<Self> {
        shape(&coaction, hopf.dim() * coalgebra.dim, coalgebra.dim, "coaction")?;
        Ok(ComoduleCoalgebra { hopf, coalgebra, coaction })
    }

    pub fn trivial_coaction(hopf: HopfAlgebraData<F>, coalgebra: CoalgebraData<F>) -> Self {
        let coaction = trivial_coaction_matrix(&hopf, coalgebra.dim);
        ComoduleCoalgebra { hopf, coalgebra, coaction }
    }

    pub fn coact_op(&self) -> Op<F> {
        Op::new(self.coaction.clone(), vec![self.coalgebra.dim], vec![self.hopf.dim(), self.coalgebra.dim])
    }

    /// The coassociativity-style compatibility between `Δ_Z` and the coaction.
    pub fn check_compatibility(&self) -> Report {
        let mut r = Report::new();
        let z = self.coalgebra.dim;
        let (rho, dz, mh) = (self.coact_op(), self.coalgebra.comul_op(), self.hopf.mul_op());
        compare_maps(&mut r, "coaction compatibility", &[z], |t| t.apply(0, &rho).apply(1, &dz), |t| {
            t.apply(0, &dz).apply(1, &rho).apply(0, &rho).permute(&[0, 2, 1, 3]).apply(0, &mh)
        });
        r
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.hopf.check_structure().prefixed("hopf");
        r.merge(self.coalgebra.check_structure().prefixed("coalgebra"));
        check_coaction(&mut r, &self.hopf, &self.coact_op(), self.coalgebra.dim);
        r.merge(self.check_compatibility());
        r
    }
}

impl<F: Field> ModComodule<F> {
    pub fn new(hopf: HopfAlgebraData<F>, dim: usize, action: Matrix<F>, coaction: Matrix<F>) -> Result<Self> {
        shape(&action, dim, hopf.dim() * dim, "action")?;
        shape(&coaction, hopf.dim() * dim, dim, "coaction")?;
        Ok(ModComodule { hopf, dim, action, coaction })
    }

    /// `k` with action through `ε` and coaction `1 ↦ 1 ⊗ 1`.
    pub fn trivial(hopf: HopfAlgebraData<F>) -> Self {
        let action = trivial_action_matrix(&hopf, 1);
        let coaction = trivial_coaction_matrix(&hopf, 1);
        ModComodule { hopf, dim: 1, action, coaction }
    }

    pub fn act_op(&self) -> Op<F> {
        Op::new(self.action.clone(), vec![self.hopf.dim(), self.dim], vec![self.dim])
    }

    pub fn coact_op(&self) -> Op<F> {
        Op::new(self.coaction.clone(), vec![self.dim], vec![self.hopf.dim(), self.dim])
    }

    pub fn has_trivial_coaction(&self) -> bool {
        self.coaction == trivial_coaction_matrix(&self.hopf, self.dim)
    }

    pub fn check_structure(&self) -> Report {
        let mut r = self.hopf.check_structure().prefixed("hopf");
        check_action(&mut r, &self.hopf, &self.act_op(), self.dim);
        check_coaction(&mut r, &self.hopf, &self.coact_op(), self.dim);
        r
    }
}

impl<F: Field> ModularPair<F> {
    pub fn trivial(hopf: &HopfAlgebraData<F>) -> Self {
        ModularPair { sigma: hopf.unit().to_vec(), delta: hopf.counit().to_vec() }
    }

    pub fn check_structure(&self, hopf: &HopfAlgebraData<F>) -> Report {
        let mut r = Report::new();
        r.require(hopf.is_group_like(&self.sigma), "sigma is group-like", || format!("{:?}", self.sigma));
        r.require(hopf.is_character(&self.delta), "delta is a character", || format!("{:?}", self.delta));
        r
    }
}

impl<F: Field> EquivariantPairing<F> {
    pub fn phi_op(&self) -> Op<F> {
        let (c, a) = (self.coalg.coalgebra.dim, self.alg.algebra.dim);
        Op::new(self.phi.clone(), vec![c, a], vec![a])
    }
}

pub(crate) fn unit_vector<F: Field>(d: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d];
    v[i] = F::one();
    v
}

pub(crate) fn trivial_action_matrix<F: Field>(hopf: &HopfAlgebraData<F>, dim: usize) -> Matrix<F> {
    Matrix::from_fn(dim, hopf.dim() * dim, |c| {
        let (h, m) = (c / dim, c % dim);
        let e = hopf.counit()[h].clone();
        if e.is_zero() {
            vec![]
        } else {
            vec![(m, e)]
        }
    })
}

pub(crate) fn trivial_coaction_matrix<F: Field>(hopf: &HopfAlgebraData<F>, dim: usize) -> Matrix<F> {
    Matrix::from_fn(hopf.dim() * dim, dim, |m| {
        hopf.unit()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(h, x)| (h * dim + m, x.clone()))
            .collect()
    })
}

fn shape<F: Field>(m: &Matrix<F>, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::ShapeMismatch(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_action<F: Field>(r: &mut Report, hopf: &HopfAlgebraData<F>, act: &Op<F>, dim: usize) {
    let h = hopf.dim();
    let (m, u) = (hopf.mul_op(), hopf.unit_op());
    compare_maps(r, "action associativity", &[h, h, dim], |t| t.apply(1, act).apply(0, act), |t| {
        t.apply(0, &m).apply(0, act)
    });
    compare_maps(r, "action unit", &[dim], |t| t.clone(), |t| t.apply(0, &u).apply(0, act));
}

fn check_coaction<F: Field>(r: &mut Report, hopf: &HopfAlgebraData<F>, rho: &Op<F>, dim: usize) {
    let (dl, e) = (hopf.comul_op(), hopf.counit_op());
    compare_maps(r, "coaction coassociativity", &[dim], |t| t.apply(0, rho).apply(0, &dl), |t| {
        t.apply(0, rho).apply(1, rho)
    });
    compare_maps(r, "coaction counit", &[dim], |t| t.clone(), |t| t.apply(0, rho).apply(0, &e));
}

/// Compares two maps on every basis tensor of `dims`, recording at most a
/// few failing tuples per identity.
pub fn compare_maps<F: Field>(
    r: &mut Report,
    name: &str,
    dims: &[usize],
    lhs: impl Fn(&Terms<F>) -> Terms<F>,
    rhs: impl Fn(&Terms<F>) -> Terms<F>,
) {
    let shape = TensorShape::new(dims.to_vec());
    let mut bad = Vec::new();
    let mut count = 0usize;
    for idx in shape.indices() {
        let t = Terms::basis(idx.clone());
        if lhs(&t) != rhs(&t) {
            count += 1;
            if bad.len() < 3 {
                bad.push(format!("{idx:?}"));
            }
        }
    }
    if count > 0 {
        r.fail(name, format!("basis tuples {} ({count} total)", bad.join(", ")));
    }
}
