//! Operator words indexed by tableaux.

use crate::algebra::{LinearOperator, Space};
use crate::error::{Error, Result};
use crate::tableaux::Tableau;

fn check_entries(space: Space, a: &Tableau) -> Result<()> {
    if a.max_entry() > space.m() {
        return Err(Error::invalid(format!(
            "tableau entry {} exceeds m = {}",
            a.max_entry(),
            space.m()
        )));
    }
    Ok(())
}

/// The operator word Θ_{A(1,1)}…Θ_{A(1,λ₁)} Θ_{A(2,1)}… over the boxes of
/// `a` in row-major order, read as an operator product: the factor of the
/// last box acts first. The empty tableau gives the identity.
pub fn theta_word(space: Space, a: &Tableau) -> Result<LinearOperator> {
    check_entries(space, a)?;
    let mut op = LinearOperator::identity(space.m(), space.p());
    for (_, _, entry) in a.boxes() {
        op = op.compose(&space.theta_op(entry)?);
    }
    Ok(op)
}

/// The reversed word of Dirac operators
/// D_{A(ℓ,λ_ℓ)}…D_{A(ℓ,1)} … D_{A(1,λ₁)}…D_{A(1,1)},
/// the adjoint of `theta_word(a)`: here the factor of the FIRST box acts
/// first.
pub fn dirac_word(space: Space, a: &Tableau) -> Result<LinearOperator> {
    check_entries(space, a)?;
    let entries: Vec<usize> = a.boxes().map(|(_, _, e)| e).collect();
    let mut op = LinearOperator::identity(space.m(), space.p());
    for &entry in entries.iter().rev() {
        op = op.compose(&space.dirac_op(entry)?);
    }
    Ok(op)
}
