# example_usage.py

"""
Exemplo de uso do pipeline outline-energy

Este script demonstra como:
1. Gerar o conjunto fatorial (5760 amostras) e simular as cargas
2. Resumir a carga por forma e executar a PCA
3. Ajustar os modelos polinomiais substitutos e gravar os relatórios
"""

import sys
import time
from pathlib import Path

# Adicionar diretório raiz ao path para imports
sys.path.insert(0, str(Path(__file__).parent))

from outline_energy.analyzers.shape_analyzer import summary_frame
from outline_energy.config.logger import setup_logger
from outline_energy.config.pipeline_config import PipelineConfig
from outline_energy.pipeline import ANALYSIS_FILE, DATASET_FILE, FIGURES_DIR, FITS_FILE, OutlinePipeline

logger = setup_logger(__name__)

def main():
    """Executar exemplo do pipeline"""
    logger.info("=" * 80)
    logger.info("EXEMPLO DE USO - OUTLINE ENERGY")
    logger.info("=" * 80)

    try:
        output_dir = Path("data/output/example")
        config = PipelineConfig(seed=42, output_dir=output_dir, degrees=(1, 2, 3))

        pipeline = OutlinePipeline(config)
        pipeline.run()
        start = time.perf_counter()

        logger.info("\n🏗️  Gerando amostras e simulando cargas...")
        pipeline.generate() \
            .save_dataset(output_dir / DATASET_FILE)

        logger.info("\n📊 Analisando...")
        pipeline.analyze() \
            .save_analysis(output_dir / ANALYSIS_FILE, output_dir / FIGURES_DIR)

        logger.info("\n📋 Carga por forma (kWh/m²·ano):")
        logger.info("\n" + summary_frame(pipeline.summary).round(2).to_string())
        logger.info(f"\nT/U/L em relação ao quadrado: {pipeline.comparison.mean_pct:+.2f}% na média")

        logger.info("\n📈 Ajustando modelos substitutos...")
        pipeline.fit() \
            .save_fits(output_dir / FITS_FILE, output_dir / FIGURES_DIR)

        for condition, best in pipeline.fit_report()["best_by_condition"].items():
            logger.info(f"  {condition:<6} melhor grau {best['degree']} (R² teste = {best['r2_test']:.4f})")

        pipeline.finish(execution_time=time.perf_counter() - start)

        logger.info("\n📈 Estatísticas do Pipeline:")
        for key, value in pipeline.get_stats().items():
            if key not in ['start_time', 'end_time']:
                logger.info(f"  {key}: {value}")

        logger.info("\n" + "=" * 80)
        logger.info("✓ PIPELINE CONCLUÍDO COM SUCESSO!")
        logger.info("=" * 80)

        return 0

    except Exception as e:
        logger.error(f"✗ Erro durante execução: {str(e)}", exc_info=True)
        return 1

if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
