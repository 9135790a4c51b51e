fn main() {
    std::process::exit(pdgraph::run(std::env::args_os()));
}
