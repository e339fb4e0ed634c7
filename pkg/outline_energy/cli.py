# outline_energy/cli.py

"""
Interface de linha de comando: generate | analyze | fit | run-all | shapes

Códigos de saída: 0 sucesso, 1 erro inesperado, 2 configuração/validação,
3 entrada/saída, 4 falha numérica.
"""

import argparse
import json
import sys
from typing import List, Optional

from .config.logger import setup_logger
from .config.pipeline_config import PipelineConfig
from .config.settings import settings
from .exceptions import OutlineEnergyException
from .geometry.outlines import SHAPE_ORDER, OutlineGeometry
from .pipeline import cmd_analyze, cmd_fit, cmd_generate, cmd_run_all

logger = setup_logger(__name__)

def _degrees(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de graus inválida: {text!r} (ex.: 1,2,3,4)") from None
    if not values:
        raise argparse.ArgumentTypeError("lista de graus vazia")
    return values

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="Arquivo JSON de configuração (PipelineConfig)")
    parser.add_argument("--seed", type=int, help="Semente global")
    parser.add_argument("--out", help="Diretório de saída")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outline-energy",
        description="Gera cargas térmicas anuais para plantas quadrada, T, U e L, "
                    "resume-as por forma, faz PCA e ajusta modelos polinomiais substitutos.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", help="Gerar o conjunto de dados (dataset.csv)")
    _add_common(generate)
    generate.add_argument("--mode", choices=["factorial", "random"], help="Modo de amostragem")
    generate.add_argument("--n", type=int, help="Número de amostras no modo random")

    analyze = subparsers.add_parser("analyze", help="Estatísticas por forma e PCA (analysis.json)")
    _add_common(analyze)
    analyze.add_argument("data", help="CSV do conjunto de dados")
    analyze.add_argument("--svg", action="store_true", default=None, help="Gravar figuras SVG")

    fit = subparsers.add_parser("fit", help="Ajustar os modelos substitutos (fits.json)")
    _add_common(fit)
    fit.add_argument("data", help="CSV do conjunto de dados")
    fit.add_argument("--degrees", type=_degrees, help="Graus separados por vírgula (padrão 1,2,3,4)")
    fit.add_argument("--svg", action="store_true", default=None, help="Gravar figuras SVG")

    run_all = subparsers.add_parser("run-all", help="Executar todas as etapas e gravar todos os artefatos")
    _add_common(run_all)
    run_all.add_argument("--mode", choices=["factorial", "random"], help="Modo de amostragem")
    run_all.add_argument("--n", type=int, help="Número de amostras no modo random")
    run_all.add_argument("--degrees", type=_degrees, help="Graus separados por vírgula (padrão 1,2,3,4)")
    run_all.add_argument("--svg", action="store_true", default=None, help="Sem efeito: run-all sempre grava figuras")

    subparsers.add_parser("shapes", help="Imprimir os contornos canônicos em JSON")
    return parser

def _load_config(args: argparse.Namespace) -> PipelineConfig:
    overrides = {
        "seed": getattr(args, "seed", None),
        "output_dir": getattr(args, "out", None),
        "mode": getattr(args, "mode", None),
        "n": getattr(args, "n", None),
        "degrees": getattr(args, "degrees", None),
        "svg": getattr(args, "svg", None),
    }
    return PipelineConfig.load(getattr(args, "config", None), overrides)

def _print_shapes() -> None:
    outlines = [OutlineGeometry.canonical_outline(shape).to_dict() for shape in SHAPE_ORDER]
    sys.stdout.write(json.dumps(outlines, indent=2) + "\n")

def main(argv: Optional[List[str]] = None) -> int:
    """
    Ponto de entrada da CLI

    Args:
        argv: Argumentos (None = sys.argv[1:])

    Returns:
        Código de saída
    """
    args = build_parser().parse_args(argv)

    try:
        if args.command == "shapes":
            _print_shapes()
            return 0

        config = _load_config(args)
        if args.command == "generate":
            path = cmd_generate(config)
        elif args.command == "analyze":
            path = cmd_analyze(config, args.data, svg=args.svg)
        elif args.command == "fit":
            path = cmd_fit(config, args.data, svg=args.svg)
        else:
            path = cmd_run_all(config)

        logger.info(f"✓ {args.command} concluído: {path}")
        return 0
    except OutlineEnergyException as e:
        logger.error(f"✗ {args.command} falhou: {str(e)}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"✗ Erro inesperado em {args.command}: {str(e)}")
        return 1
