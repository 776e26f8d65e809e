from kkclique.model.envelope import FORMATS, OutputEnvelope

__all__ = ["FORMATS", "OutputEnvelope"]
