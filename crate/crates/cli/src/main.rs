use std::io::Read;
use std::process::ExitCode;

use wrapsurg_cli::{batch, execute, EXIT_PARSE};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let is_batch = args.first().map(String::as_str) == Some("batch");
    let outcome = if is_batch {
        let input = match args.get(1) {
            Some(path) => std::fs::read_to_string(path),
            None => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map(|_| buf)
            }
        };
        match input {
            Ok(text) => batch(&text),
            Err(e) => {
                eprintln!("cannot read batch input: {e}");
                return ExitCode::from(EXIT_PARSE as u8);
            }
        }
    } else {
        execute(args)
    };
    if outcome.code == EXIT_PARSE && !is_batch {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.code as u8)
}
