use num_rational::BigRational;

use crate::groebner::{GbConfig, Ideal};
use crate::polycore::{format_rational, Field, MonomialOrder, Polynomial, Ring};

use super::{coordinate_weight, MukaiError, V12};
use crate::grassmann::parse_coordinate_name;

/// The hyperplane cutting a fixed divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Coordinate(&'static str),
    /// `p_0156 - b p_0246`, the weight-zero pencil.
    Pencil,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorKind {
    /// An affine equation is reported.
    Equation,
    /// Only smoothness of the affine part is reported.
    Smoothness,
}

#[derive(Clone, Debug)]
pub struct DivisorSpec {
    pub item: usize,
    pub selector: Selector,
    /// Coordinate set to one.
    pub chart: &'static str,
    pub targets: [&'static str; 3],
    pub kind: DivisorKind,
}

const SMALL: [&str; 3] = ["p_1356", "p_1456", "p_2456"];
const BIG: [&str; 3] = ["p_0124", "p_0125", "p_0135"];

/// The thirteen fixed divisors with their charts and target coordinates.
pub fn divisor_table() -> Vec<DivisorSpec> {
    use DivisorKind::*;
    let row = |item, selector, chart, targets, kind| DivisorSpec { item, selector, chart, targets, kind };
    vec![
        row(1, Selector::Coordinate("p_0123"), "p_3456", SMALL, Equation),
        row(2, Selector::Coordinate("p_0124"), "p_3456", SMALL, Equation),
        row(3, Selector::Coordinate("p_0125"), "p_3456", SMALL, Equation),
        row(4, Selector::Coordinate("p_0135"), "p_3456", SMALL, Equation),
        row(5, Selector::Coordinate("p_0136"), "p_0123", BIG, Equation),
        row(6, Selector::Coordinate("p_0146"), "p_3456", SMALL, Equation),
        row(7, Selector::Coordinate("p_0256"), "p_3456", SMALL, Equation),
        row(8, Selector::Coordinate("p_0356"), "p_3456", SMALL, Equation),
        row(9, Selector::Coordinate("p_1356"), "p_3456", SMALL, Smoothness),
        row(10, Selector::Coordinate("p_1456"), "p_3456", SMALL, Smoothness),
        row(11, Selector::Coordinate("p_2456"), "p_3456", SMALL, Smoothness),
        row(12, Selector::Coordinate("p_3456"), "p_0123", BIG, Equation),
        row(13, Selector::Pencil, "p_0123", BIG, Equation),
    ]
}

#[derive(Clone, Debug)]
pub struct DivisorRecord<F: Field> {
    pub item: usize,
    /// Torus weight of the cutting form.
    pub weight: i32,
    /// Cutting form in the Plücker coordinates.
    pub cut: Polynomial<F>,
    pub b: Option<BigRational>,
    pub chart: String,
    pub targets: Vec<String>,
    /// Generator of the elimination ideal in the target coordinates.
    pub equation: Polynomial<F>,
    /// Whether the affine chart of the divisor projects isomorphically onto
    /// the hypersurface `equation = 0`.
    pub graph: bool,
    /// `graph` and the equation has no singular points.
    pub smooth: bool,
}

/// Affine equation of a fixed divisor on `V12`: the hyperplane section is
/// intersected with the chart and every free coordinate other than the
/// targets is eliminated.
pub fn divisor_affine_equation<F: Field>(
    v12: &V12<F>,
    spec: &DivisorSpec,
    b: Option<&BigRational>,
    cfg: &GbConfig,
) -> Result<DivisorRecord<F>, MukaiError> {
    let amb = &v12.grass.coords.ring;
    let ctx = amb.ctx();
    let var = |name: &str| amb.var(amb.index_of(name).unwrap());
    let (cut, weight, b) = match &spec.selector {
        Selector::Coordinate(name) => (var(name), coordinate_weight(&parse_coordinate_name(name).unwrap()), None),
        Selector::Pencil => {
            let bq = b.ok_or(MukaiError::MissingPencil(spec.item))?;
            let bv = F::from_rational(ctx, bq).ok_or_else(|| MukaiError::NotRepresentable(format_rational(bq)))?;
            (&var("p_0156") - &var("p_0246").scale(&bv), 0, Some(bq.clone()))
        }
    };
    let free_ring = &v12.section.ring;
    let free_var = |name: &str| -> Result<usize, MukaiError> {
        free_ring.index_of(name).ok_or_else(|| MukaiError::NotFree(name.to_string()))
    };
    let chart = free_var(spec.chart)?;

    // drop the chart variable by setting it to one
    let kept: Vec<usize> = (0..free_ring.nvars()).filter(|&v| v != chart).collect();
    let names: Vec<&str> = kept.iter().map(|&v| free_ring.name(v)).collect();
    let affine = Ring::new(&names, MonomialOrder::Grevlex, ctx.clone());
    let images: Vec<Polynomial<F>> = (0..free_ring.nvars())
        .map(|v| if v == chart { affine.one() } else { affine.var(kept.iter().position(|&k| k == v).unwrap()) })
        .collect();
    let mut gens: Vec<Polynomial<F>> = v12.ideal.gens().iter().map(|q| q.substitute(&affine, &images)).collect();
    gens.push(v12.section.pull(&cut).substitute(&affine, &images));
    let ideal = Ideal::new(&affine, gens)?;

    let target_pos: Vec<usize> = spec
        .targets
        .iter()
        .map(|t| affine.index_of(t).ok_or_else(|| MukaiError::NotFree(t.to_string())))
        .collect::<Result<_, _>>()?;
    let drop: Vec<usize> = (0..affine.nvars()).filter(|v| !target_pos.contains(v)).collect();
    let block = MonomialOrder::block(affine.nvars(), &drop);
    let big = ideal.groebner_in(block, cfg)?;
    let basis = big.basis().unwrap();
    let eliminated: Vec<&Polynomial<F>> =
        basis.iter().filter(|g| g.terms().iter().all(|t| drop.iter().all(|&v| t.mon.exp(v) == 0))).collect();
    if eliminated.len() != 1 {
        return Err(MukaiError::NotPrincipal(eliminated.len()));
    }
    let graph =
        drop.iter().all(|&v| basis.iter().any(|g| g.lm().map(|m| m.degree() == 1 && m.exp(v) == 1).unwrap_or(false)));

    let target_ring = Ring::new(&spec.targets, MonomialOrder::Grevlex, ctx.clone());
    let equation = eliminated[0].rename_into(&target_ring)?.canonical();
    let smooth = graph && {
        let mut jac = vec![equation.clone()];
        jac.extend((0..3).map(|v| equation.derivative(v)));
        Ideal::new(&target_ring, jac)?.groebner(cfg)?.is_unit()?
    };
    Ok(DivisorRecord {
        item: spec.item,
        weight,
        cut,
        b,
        chart: spec.chart.to_string(),
        targets: spec.targets.iter().map(|s| s.to_string()).collect(),
        equation,
        graph,
        smooth,
    })
}
