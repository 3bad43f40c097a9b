use clap::Parser;

fn main() {
    let cli = xxrx_cli::Cli::parse();
    let code = xxrx_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
