//! Spin-chain form of the fixed line and its GHZ eigenstates.

use nhkitaev::spin::spin_identity_report;

fn main() -> nhkitaev::Result<()> {
    for c in spin_identity_report(8, 1.0, &[0.5, 2.0])? {
        println!("{:<5} {:.1e}  {}", if c.passed { "ok" } else { "FAIL" }, c.residual, c.name);
    }
    Ok(())
}
