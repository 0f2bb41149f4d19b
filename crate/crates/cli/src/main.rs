use clap::Parser;
use polyq_cli::app::{self, Cli, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(EXIT_USAGE);
            }
            print!("{e}");
            std::process::exit(app::EXIT_OK);
        }
    };
    match app::run(cli) {
        Ok(output) => println!("{output}"),
        Err(failure) => {
            if failure.is_report() {
                println!("{}", failure.message());
            } else {
                eprintln!("{}", failure.message());
            }
            std::process::exit(failure.exit_code());
        }
    }
}
