use nhkitaev::spin::heisenberg_ring_check;

fn main() -> nhkitaev::Result<()> {
    for sites in [4, 6, 8, 10] {
        let r = heisenberg_ring_check(sites)?;
        println!(
            "{sites:>2} sites: |V R| = {:.1e}, |V L| = {:.1e}, ring eigenvalue {}",
            r.annihilation_right, r.annihilation_left, r.ring_eigenvalue
        );
    }
    Ok(())
}
