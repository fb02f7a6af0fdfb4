use std::io::Write;

fn main() {
    let env_seed = std::env::var(cycres_cli::SEED_ENV).ok();
    let out = cycres_cli::run(std::env::args_os(), env_seed.as_deref());
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    std::io::stderr().write_all(out.stderr.as_bytes()).ok();
    std::process::exit(out.code);
}
