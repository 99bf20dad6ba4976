//! Prints an instance as a lattice file: `cargo run --example render_instance zn:12`.

use xlattice::corpus::InstanceSpec;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "K".into());
    let instance: InstanceSpec = arg.parse().unwrap_or_else(|e| panic!("{e}"));
    let m = instance.build().expect("valid instance");
    print!("{}", xlattice_cli::spec::render(&instance.to_string(), &m, &[]));
}
