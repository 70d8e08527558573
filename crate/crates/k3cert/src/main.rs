fn main() {
    eprintln!("k3cert CLI not yet wired");
    std::process::exit(2);
}
