"""
Tool Registry

Module: src.tools.tool_registry
Purpose: Lookup of tools by verb name
Status: Complete
Created: 2026-10-17
"""

import logging
from typing import Dict, Iterable, List, Optional

from src.tools.base import Tool
from src.tools.basis_tool import BasisTool
from src.tools.characteristic_map_tool import CharacteristicMapTool
from src.tools.dimension_tool import DimensionTool
from src.tools.idempotent_tool import IdempotentTool
from src.tools.schur_tool import DoubleSchurTool, SchurTool
from src.tools.verification_tool import VerificationTool

logger = logging.getLogger(__name__)


class ToolRegistry:
    """Holds one instance per verb."""

    def __init__(self, tools: Optional[Iterable[Tool]] = None):
        self._tools: Dict[str, Tool] = {}
        for tool in tools or ():
            self.register(tool)

    def register(self, tool: Tool) -> None:
        """
        Raises:
            ValueError: A tool with the same name is already registered
        """
        if tool.name in self._tools:
            raise ValueError(f"Tool '{tool.name}' is already registered")
        self._tools[tool.name] = tool
        logger.debug("Registered tool %s", tool.name)

    def get(self, name: str) -> Tool:
        """
        Raises:
            KeyError: Unknown tool name
        """
        if name not in self._tools:
            raise KeyError(f"Unknown tool: '{name}'. Must be one of: {', '.join(self.names())}")
        return self._tools[name]

    def names(self) -> List[str]:
        return list(self._tools)

    def __contains__(self, name: str) -> bool:
        return name in self._tools


def default_registry() -> ToolRegistry:
    """Every verb of the command line."""
    return ToolRegistry([
        DimensionTool(),
        IdempotentTool(),
        CharacteristicMapTool(),
        SchurTool(),
        DoubleSchurTool(),
        VerificationTool(),
        BasisTool(),
    ])


__all__ = ["ToolRegistry", "default_registry"]
