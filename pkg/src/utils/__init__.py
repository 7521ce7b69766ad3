from .logging import setup_logging, trace, log_call_flow, log_validation

__all__ = ["setup_logging", "trace", "log_call_flow", "log_validation"]
