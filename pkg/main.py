"""
Arquivo principal: gera triangulos da familia de Borel e roda as verificacoes.

Uso rapido:
  - python main.py gen --family borel --rows 7
  - python main.py gen --family fuss-catalan --r 3 --rows 6 --format csv
  - python main.py sums --family tilde --r 1 --s 1 --rows 7
  - python main.py prodmat --family borel-moments --rows 5
  - python main.py jfrac --family borel --y 1 --depth 5
  - python main.py revert --family catalan-triangle --rows 8
  - python main.py check --suite all

A ordem de truncamento padrao vem de RIORDAN_ORDER (.env), sobrescrita por --order.
"""

import argparse
import logging
import sys

from src.errors import ConfigError, FamilyError, RiordanError

logger = logging.getLogger("main")


def _spec(args):
    from src.models import FamilySpec

    return FamilySpec(name=args.family, r=args.r, s=args.s, t=args.t or ())


def _order(args, settings) -> int:
    order = settings.order if args.order is None else args.order
    if order < 1:
        raise ConfigError(f"--order deve ser >= 1, recebido {order}")
    return order


def cmd_gen(args, settings):
    from src.commands import run_gen

    print(run_gen(_spec(args), args.rows, _order(args, settings), args.format, args.y), end="")
    return 0


def cmd_sums(args, settings):
    from src.commands import run_sums

    print(run_sums(_spec(args), args.rows, _order(args, settings), args.kind), end="")
    return 0


def cmd_prodmat(args, settings):
    from src.commands import run_prodmat

    print(run_prodmat(_spec(args), args.rows, _order(args, settings), args.format), end="")
    return 0


def cmd_jfrac(args, settings):
    from src.commands import run_jfrac

    if args.y is None:
        raise FamilyError("jfrac exige --y (a extracao e feita sobre os racionais)")
    print(run_jfrac(_spec(args), args.y, args.depth, _order(args, settings)), end="")
    return 0


def cmd_revert(args, settings):
    from src.commands import run_revert

    print(run_revert(_spec(args), args.rows, _order(args, settings), args.format, args.binomial), end="")
    return 0


def cmd_check(args, settings):
    from src.commands import run_check

    report, status = run_check(args.suite, settings, args.order)
    print(report, end="")
    return status


def _add_family_args(p: argparse.ArgumentParser, rows: int = 7) -> None:
    from src.parsers import parse_param, parse_rational, parse_t

    def typed(fn):
        def wrapper(text):
            try:
                return fn(text)
            except ValueError as e:
                raise argparse.ArgumentTypeError(str(e))

        wrapper.__name__ = fn.__name__
        return wrapper

    p.add_argument("--family", required=True, help="Familia (borel, r-borel, rs-borel, tilde, fuss-borel, ...)")
    p.add_argument("--r", type=typed(parse_param), default=None, help="Parametro r: inteiro, p/q ou y")
    p.add_argument("--s", type=typed(parse_param), default=None, help="Parametro s: inteiro, p/q ou y")
    p.add_argument("--t", type=typed(parse_t), default=None, help="Coeficientes t0,...,tr (gen-fuss-borel)")
    p.add_argument("--rows", type=int, default=rows, help=f"Numero de linhas (default={rows})")
    p.add_argument("--order", type=int, default=None, help="Ordem de truncamento (padrao: RIORDAN_ORDER)")
    p.add_argument("--y", type=typed(parse_rational), default=None, help="Valor racional p/q para y")


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=["table", "csv", "bfile", "json"],
        default="table",
        help="Formato de saida: table|csv|bfile|json (padrao: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borel_riordan",
        description="Aritmetica exata de arrays de Riordan e triangulos da familia de Borel",
    )
    sub = parser.add_subparsers(dest="command")

    # Subcomando: gen
    p_gen = sub.add_parser("gen", help="Gera o triangulo de uma familia")
    _add_family_args(p_gen)
    _add_format_arg(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    # Subcomando: sums
    p_sums = sub.add_parser("sums", help="Somas de linhas ou diagonais, conferidas com a funcao geradora")
    _add_family_args(p_sums)
    p_sums.add_argument("--kind", choices=["row", "diag"], default="row", help="row|diag (padrao: row)")
    p_sums.set_defaults(func=cmd_sums)

    # Subcomando: prodmat
    p_prod = sub.add_parser("prodmat", help="Matriz de producao do triangulo")
    _add_family_args(p_prod, rows=5)
    _add_format_arg(p_prod)
    p_prod.set_defaults(func=cmd_prodmat)

    # Subcomando: jfrac
    p_jfrac = sub.add_parser("jfrac", help="Fracao continua de Jacobi da funcao geradora em y racional")
    _add_family_args(p_jfrac)
    p_jfrac.add_argument("--depth", type=int, default=5, help="Profundidade da fracao (default=5)")
    p_jfrac.set_defaults(func=cmd_jfrac)

    # Subcomando: revert
    p_rev = sub.add_parser("revert", help="Reversao do triangulo, (1/x) Rev(x T(x,y))")
    _add_family_args(p_rev, rows=8)
    _add_format_arg(p_rev)
    p_rev.add_argument("--binomial", action="store_true", help="Multiplica o resultado a esquerda por Pascal")
    p_rev.set_defaults(func=cmd_revert)

    # Subcomando: check
    p_check = sub.add_parser("check", help="Roda as suites de verificacao (paper, oeis, properties, all)")
    p_check.add_argument("--suite", choices=["paper", "oeis", "properties", "all"], default="all")
    p_check.add_argument("--order", type=int, default=None, help="Ordem de truncamento (padrao: RIORDAN_ORDER)")
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2

    from src.config import load_settings

    try:
        settings = load_settings()
        logging.basicConfig(level=settings.log_level, format="[%(name)s] %(message)s")
        return args.func(args, settings)
    except (FamilyError, ConfigError) as e:
        print(f"erro: {e}", file=sys.stderr)
        return 2
    except RiordanError as e:
        print(f"falha: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
