//! Writes the named example states into a directory as state files.

use std::path::PathBuf;

use sepball::states::{ha24_matrix, maximally_mixed, sigma1, sigma24, varsigma24};
use sepball::statefile::write_state;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "states".into()));
    std::fs::create_dir_all(&dir)?;
    let valid = [
        ("sigma1", sigma1()),
        ("maximally_mixed_2x2", maximally_mixed(2).unwrap()),
        ("varsigma24_a1", varsigma24(1.0).unwrap()),
        ("sigma24", sigma24()),
    ];
    for (name, rho) in valid {
        std::fs::write(dir.join(format!("{name}.state")), write_state(rho.matrix(), rho.d(), false))?;
    }
    std::fs::write(dir.join("ha24.state"), write_state(&ha24_matrix(), 4, true))?;
    Ok(())
}
