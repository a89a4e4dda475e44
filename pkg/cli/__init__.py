from cli.interface import run_cli, build_parser, config_from_args

__all__ = ["run_cli", "build_parser", "config_from_args"]
