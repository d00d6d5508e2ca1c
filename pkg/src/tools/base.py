"""
Base Tool Interface

Module: src.tools.base
Purpose: Standard interface every command-line verb implements
Status: Complete
Created: 2026-10-17

A tool validates its own inputs and never raises: domain errors come back
as {"success": False, "data": None, "error": message} payloads, which the
CLI maps to exit code 1.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict

logger = logging.getLogger(__name__)


class Tool(ABC):
    """
    Base class for all tools.

    Subclasses describe their options as a JSON schema and return plain,
    JSON-serializable data.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Returns:
            str: Unique tool identifier, the CLI verb (e.g., 'chmap')
        """
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """
        Returns:
            str: What the tool computes
        """
        pass

    @property
    @abstractmethod
    def parameters(self) -> Dict[str, Any]:
        """
        Returns:
            Dict: JSON schema for the tool's options
        """
        pass

    @abstractmethod
    def execute(self, **kwargs) -> Dict[str, Any]:
        """
        Run the tool.

        Returns:
            Dict containing:
                - success: bool
                - data: Any (tool-specific output)
                - error: str or None
        """
        pass

    def render(self, data: Dict[str, Any]) -> str:
        """Human-readable form of a successful result."""
        return "\n".join(f"{key}: {value}" for key, value in data.items())

    # ------------------------------------------------------------------
    # Response helpers
    # ------------------------------------------------------------------

    def _success(self, data: Any) -> Dict[str, Any]:
        return {"success": True, "data": data, "error": None}

    def _error(self, message: str) -> Dict[str, Any]:
        # callers print the message themselves
        logger.debug("%s failed: %s", self.name, message)
        return {"success": False, "data": None, "error": message}

    def _guarded(self, action: Callable[[], Any]) -> Dict[str, Any]:
        """Run `action` and turn domain errors into error payloads."""
        try:
            return self._success(action())
        except KeyError as e:
            return self._error(f"Missing required field: {e}")
        except ZeroDivisionError as e:
            return self._error(f"Division by zero: {e}")
        except ValueError as e:
            return self._error(f"Validation error: {e}")
        except RuntimeError as e:
            return self._error(f"Computation error: {e}")


__all__ = ["Tool"]
