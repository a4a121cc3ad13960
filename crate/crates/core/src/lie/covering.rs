//! The covering algebra of `L_p` by tail adjunction.
//!
//! Every relation of the class-3 presentation that is not a definition gets
//! a fresh central "tail" generator. The Jacobi identity on triples of
//! generators then gives linear conditions on the tails; quotienting by
//! them leaves the covering algebra `M`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Subspace, Vector};

use super::families::build_lp;
use super::{Definition, LieAlgebra};

/// Right-hand side of a presentation relation.
#[derive(Debug, Clone, PartialEq)]
pub enum RelationValue<E> {
    /// The relation introduces basis element `k` (0-based).
    Defines(usize),
    Value(Vec<E>),
}

/// `[x_left, x_right] = value`, 0-based indices, `left > right`.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation<E> {
    pub left: usize,
    pub right: usize,
    pub value: RelationValue<E>,
}

/// A presentation of a nilpotent algebra on `n_generators` generators: one
/// relation for each pair `[x_i, x_j]` with `x_j` a generator, `i > j`.
#[derive(Debug, Clone)]
pub struct Presentation<F: Field> {
    pub field: F,
    pub dim: usize,
    pub n_generators: usize,
    pub relations: Vec<Relation<F::Elem>>,
}

impl<F: Field> Presentation<F> {
    /// Reads the presentation off an algebra carrying generators and
    /// definitions. Relations are listed in order of `(left, right)`.
    pub fn from_algebra(algebra: &LieAlgebra<F>) -> Self {
        let defs = algebra.definitions();
        let g = algebra.generator_count();
        let mut relations = Vec::new();
        for i in 1..algebra.dim() {
            for j in 0..g.min(i) {
                let value = match defs.iter().find(|d| d.left == i && d.right == j) {
                    Some(d) => RelationValue::Defines(d.target),
                    None => RelationValue::Value(algebra.structure(i, j).to_vec()),
                };
                relations.push(Relation { left: i, right: j, value });
            }
        }
        Presentation { field: algebra.field().clone(), dim: algebra.dim(), n_generators: g, relations }
    }

    pub fn definitions(&self) -> impl Iterator<Item = &Relation<F::Elem>> {
        self.relations.iter().filter(|r| matches!(r.value, RelationValue::Defines(_)))
    }
}

/// One tail: ambient index `tail` is added to `[x_left, x_right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailRelation {
    pub tail: usize,
    pub left: usize,
    pub right: usize,
}

/// Jacobiator of the generator triple `(i, j, k)`, `i > j > k`, as a
/// linear form in the tails.
#[derive(Debug, Clone)]
pub struct JacobiResidual<E> {
    pub triple: (usize, usize, usize),
    pub form: Vec<E>,
}

#[derive(Debug, Clone)]
pub struct Covering<F: Field> {
    pub presentation: Presentation<F>,
    /// The unreduced algebra: `L_p` basis followed by all tails, with the
    /// tails central. Not a Lie algebra until the residuals are imposed.
    pub ambient: LieAlgebra<F>,
    pub tail_relations: Vec<TailRelation>,
    pub residuals: Vec<JacobiResidual<F::Elem>>,
    /// Subspace of the ambient space spanned by the residuals.
    pub relations_space: Subspace<F>,
    /// Ambient index to index in `M`, for the basis elements that survive.
    pub relabel: Vec<Option<usize>>,
    /// Image of each ambient basis vector in `M`.
    pub projection: Vec<Vector<F>>,
    pub m: LieAlgebra<F>,
    /// Indices in `M` of the surviving tails.
    pub tails: Vec<usize>,
    /// `[M, M, M]`.
    pub nucleus: Subspace<F>,
}

/// Tail numbering: relations whose left element is a defined (non-generator)
/// element come first, then the others, each group in presentation order.
fn tail_order<E>(p: &[Relation<E>], n_generators: usize) -> Vec<usize> {
    let non_def: Vec<usize> = (0..p.len())
        .filter(|&r| matches!(p[r].value, RelationValue::Value(_)))
        .collect();
    let (deep, shallow): (Vec<usize>, Vec<usize>) = non_def.into_iter().partition(|&r| p[r].left >= n_generators);
    deep.into_iter().chain(shallow).collect()
}

/// Adjoins the tails to `presentation`, giving the ambient algebra.
pub fn adjoin_tails<F: Field>(presentation: &Presentation<F>) -> (LieAlgebra<F>, Vec<TailRelation>) {
    let field = &presentation.field;
    let base = presentation.dim;
    let order = tail_order(&presentation.relations, presentation.n_generators);
    let dim = base + order.len();
    let mut values: Vec<Option<Vector<F>>> = vec![None; presentation.relations.len()];
    let mut tails = Vec::new();
    for (t, &r) in order.iter().enumerate() {
        let rel = &presentation.relations[r];
        let RelationValue::Value(v) = &rel.value else { unreachable!() };
        let mut w = v.clone();
        w.resize(dim, field.zero());
        w[base + t] = field.add(&w[base + t], &field.one());
        values[r] = Some(w);
        tails.push(TailRelation { tail: base + t, left: rel.left, right: rel.right });
    }
    let brackets = presentation.relations.iter().zip(values).map(|(rel, v)| {
        let v = match (&rel.value, v) {
            (_, Some(v)) => v,
            (RelationValue::Defines(k), None) => unit_vector(field, dim, *k),
            (RelationValue::Value(_), None) => unreachable!(),
        };
        (rel.left, rel.right, v)
    });
    let ambient = LieAlgebra::from_brackets(field, dim, brackets).expect("presentation indices are in range");
    (ambient, tails)
}

/// The 20 Jacobiators on generator triples `1 <= k < j < i <= 6`, ordered
/// by `i`, then `j`, then `k`.
pub fn jacobi_residuals<F: Field>(ambient: &LieAlgebra<F>, n_generators: usize) -> Vec<JacobiResidual<F::Elem>> {
    let mut out = Vec::new();
    for i in 0..n_generators {
        for j in 0..i {
            for k in 0..j {
                out.push(JacobiResidual { triple: (i + 1, j + 1, k + 1), form: ambient.jacobiator(i, j, k) });
            }
        }
    }
    out
}

/// Builds the covering algebra `M` of `L_p` over `field`.
pub fn build_covering<F: Field>(field: &F) -> Result<Covering<F>> {
    covering_of(&build_lp(field))
}

/// Covering algebra of a class-2 algebra given with generators and
/// definitions.
pub fn covering_of<F: Field>(algebra: &LieAlgebra<F>) -> Result<Covering<F>> {
    let presentation = Presentation::from_algebra(algebra);
    let (ambient, tail_relations) = adjoin_tails(&presentation);
    let residuals = jacobi_residuals(&ambient, presentation.n_generators);
    let dim = ambient.dim();
    let base = presentation.dim;

    for r in &residuals {
        if !is_zero_vector(algebra.field(), &r.form[..base]) {
            return Err(Error::Invariant(format!(
                "Jacobi residual of {:?} leaves the tail space",
                r.triple
            )));
        }
    }
    // Eliminate the highest-numbered tails first so the survivors are the
    // lowest ones.
    let mut relations_space = Subspace::with_priority(algebra.field(), dim, (0..dim).rev().collect());
    for r in &residuals {
        relations_space.insert(r.form.clone());
    }
    let (m, projection) = ambient.quotient(&relations_space)?;
    let free = relations_space.free_coordinates();
    let mut relabel = vec![None; dim];
    for (new, &old) in free.iter().enumerate() {
        relabel[old] = Some(new);
    }
    let tails: Vec<usize> = (base..m.dim()).collect();
    let m = m.with_generators(presentation.n_generators, algebra.definitions().to_vec())?;
    if !m.jacobi_check() {
        return Err(Error::Invariant("covering algebra fails the Jacobi identity".into()));
    }
    let whole = m.whole_space();
    let nucleus = m.product(&m.product(&whole, &whole), &whole);
    Ok(Covering {
        presentation,
        ambient,
        tail_relations,
        residuals,
        relations_space,
        relabel,
        projection,
        m,
        tails,
        nucleus,
    })
}

impl<F: Field> Covering<F> {
    /// `M` modulo all tails, which should be the algebra it covers.
    pub fn base_quotient(&self) -> Result<LieAlgebra<F>> {
        self.m.quotient_by_coordinates(&self.tails)
    }

    /// Quotient of `M` by the subspace spanned by `vectors`.
    pub fn quotient_m(&self, vectors: impl IntoIterator<Item = Vector<F>>) -> Result<LieAlgebra<F>> {
        let f = self.m.field();
        let n = self.m.dim();
        let mut ideal = Subspace::with_priority(f, n, (0..n).rev().collect());
        for v in vectors {
            ideal.insert(v);
        }
        Ok(self.m.quotient(&ideal)?.0)
    }

    /// The residual of the triple `(i, j, k)` (1-based).
    pub fn residual(&self, triple: (usize, usize, usize)) -> Option<&[F::Elem]> {
        self.residuals.iter().find(|r| r.triple == triple).map(|r| r.form.as_slice())
    }

    /// Whether the solved system forces `x_a = c x_b` (1-based ambient
    /// labels), i.e. `x_a - c x_b` lies in the relation space.
    pub fn forces(&self, a: usize, c: &F::Elem, b: Option<usize>) -> bool {
        let f = self.m.field();
        let mut v = zero_vector(f, self.ambient.dim());
        v[a - 1] = f.one();
        if let Some(b) = b {
            v[b - 1] = f.sub(&v[b - 1], c);
        }
        self.relations_space.contains(&v)
    }

    pub fn definition_of(&self, target: usize) -> Option<Definition> {
        self.m.definitions().iter().copied().find(|d| d.target == target)
    }

    pub fn is_trivial_residual(&self, triple: (usize, usize, usize)) -> bool {
        self.residual(triple).is_some_and(|v| is_zero_vector(self.m.field(), v))
    }
}
