from kkclique.report_generation.render import render

__all__ = ["render"]
