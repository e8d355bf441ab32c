//! The subcommands as functions from parsed inputs to output text.

use anyhow::{bail, Context, Result};
use divdiff::analysis::QuadratureConfig;
use divdiff::{
    bspline_eval, bspline_integral, change_basis, cluster_nodes, hermite_interpolant, horner_eval, matrix_polynomial,
    opitz_matrix, sample_function, DDTable, HermiteDataset, NewtonPoly, NodeSequence, PowerPoly,
};

use crate::builtin::Builtin;
use crate::format::{format_newton_form, num, num_list, parse_dataset};

/// Where Hermite data comes from.
pub enum Source<'a> {
    /// Contents of a dataset file.
    Text(&'a str),
    /// A named function sampled at the nodes (raw, clustered with `tol`).
    Function(Builtin, &'a [f64]),
}

/// Records must have adjacent repeats and ascending nodes; a positive `tol`
/// then snaps nearly equal neighbours together.
pub fn load_dataset(source: Source<'_>, tol: f64) -> Result<HermiteDataset> {
    if !(tol >= 0.0) {
        bail!("tolerance must be nonnegative, got {tol}");
    }
    match source {
        Source::Text(text) => {
            let records = parse_dataset(text)?;
            HermiteDataset::from_records(&records)?;
            if let Some(w) = records.windows(2).find(|w| w[1].0 < w[0].0) {
                bail!(
                    "records must be in ascending order of t: {} follows {}",
                    num(w[1].0),
                    num(w[0].0)
                );
            }
            Ok(HermiteDataset::from_unsorted(&records, tol)?)
        }
        Source::Function(f, nodes) => {
            if nodes.is_empty() {
                bail!("--nodes is required with --fn");
            }
            let t = cluster_nodes(nodes, tol)?;
            Ok(sample_function(&f, &t)?)
        }
    }
}

/// Row `i` lists the divided differences over `t[j..=i]` for `j = 0..=i`,
/// so the first entry of the last row is the one over all nodes.
pub fn table(data: &HermiteDataset) -> String {
    DDTable::build(data)
        .lower_rows()
        .iter()
        .map(|row| num_list(row) + "\n")
        .collect()
}

pub fn interp(data: &HermiteDataset) -> String {
    format_newton_form(&hermite_interpolant(data))
}

/// One `z p(z)` line per point.
pub fn eval(p: &NewtonPoly, at: &[f64]) -> Result<String> {
    if at.is_empty() {
        bail!("--at needs at least one point");
    }
    Ok(at
        .iter()
        .map(|&z| format!("{} {}\n", num(z), num(horner_eval(p, z).value)))
        .collect())
}

pub fn rebase(p: &NewtonPoly, centers: &[f64]) -> Result<String> {
    Ok(format_newton_form(&change_basis(p, centers)?))
}

/// `p(A)` for the bidiagonal matrix of the nodes, one row per line.
pub fn opitz(nodes: &[f64], power_coeffs: &[f64]) -> Result<String> {
    if power_coeffs.is_empty() {
        bail!("--power-coeffs needs at least one coefficient");
    }
    let t = NodeSequence::new(nodes.to_vec())?;
    let m = matrix_polynomial(&PowerPoly::new(power_coeffs.to_vec()), &opitz_matrix(&t));
    Ok(m.row_iter()
        .map(|row| num_list(&row.iter().copied().collect::<Vec<_>>()) + "\n")
        .collect())
}

/// `x M(x)` lines, then `integral v` when asked for.
pub fn bspline(knots: &[f64], at: &[f64], integrate: bool) -> Result<String> {
    if at.is_empty() && !integrate {
        bail!("--at needs at least one point (or pass --integrate)");
    }
    let t = NodeSequence::new(knots.to_vec())?;
    let mut out = String::new();
    for &x in at {
        let m = bspline_eval(x, &t).with_context(|| format!("at x = {}", num(x)))?;
        out += &format!("{} {}\n", num(x), num(m));
    }
    if integrate {
        out += &format!(
            "integral {}\n",
            num(bspline_integral(&t, &QuadratureConfig::default())?)
        );
    }
    Ok(out)
}
