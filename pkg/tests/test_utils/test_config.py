"""
Configuration and Logging Tests

Module: tests.test_utils.test_config
Purpose: Group aliases, run settings and log-level handling
Status: Complete
Created: 2026-10-17
"""

import io
import logging

import pytest
from pydantic import ValidationError

from src.tensorrep.group_kind import GroupFamily
from src.utils.config import ComputeSettings, GroupConfig
from src.utils.logger import resolve_level, setup_logging


class TestGroupConfig:
    """Test group name resolution"""

    @pytest.mark.parametrize("name,family", [
        ("gl", GroupFamily.GENERAL_LINEAR),
        ("O", GroupFamily.ORTHOGONAL),
        (" orthogonal ", GroupFamily.ORTHOGONAL),
        ("Sp", GroupFamily.SYMPLECTIC),
    ])
    def test_aliases(self, name, family):
        """Test short names, case and whitespace"""
        assert GroupConfig.resolve(name) is family

    def test_unknown(self):
        """Test the error lists the accepted names"""
        with pytest.raises(ValueError, match="Must be one of"):
            GroupConfig.resolve("unitary")

    def test_build_validates_N(self):
        """Test odd N for the symplectic group"""
        with pytest.raises(ValueError):
            GroupConfig.build("sp", 3)


class TestComputeSettings:
    """Test run-wide limits"""

    def test_defaults(self):
        """Test the default guard and seed"""
        settings = ComputeSettings()
        assert settings.max_dimension == 10**6
        assert settings.force_large is False
        assert settings.rng_seed == 0

    def test_positive_limit(self):
        """Test max_dimension must be positive"""
        with pytest.raises(ValidationError):
            ComputeSettings(max_dimension=0)

    def test_log_level_normalized(self):
        """Test level names are upper-cased and checked"""
        assert ComputeSettings(log_level="info").log_level == "INFO"
        with pytest.raises(ValidationError):
            ComputeSettings(log_level="LOUD")


class TestLogging:
    """Test the project logger setup"""

    def test_resolve_level(self):
        """Test names and numbers"""
        assert resolve_level("debug") == logging.DEBUG
        assert resolve_level(logging.ERROR) == logging.ERROR

    def test_unknown_level(self):
        """Test an unknown name"""
        with pytest.raises(ValueError, match="Must be one of"):
            resolve_level("LOUD")

    def test_public_names(self):
        """Test the module exports only the setup helpers"""
        from src.utils import logger as logger_module

        assert set(logger_module.__all__) == {"LOG_FORMAT", "VALID_LEVELS", "resolve_level", "setup_logging"}
        assert not hasattr(logger_module, "get_logger")

    def test_stream_and_level(self):
        """Test messages reach the given stream at the chosen level"""
        stream = io.StringIO()
        logger = setup_logging("INFO", stream)
        logging.getLogger("src.demo").info("built E_T")
        logging.getLogger("src.demo").debug("hidden")
        assert logger.name == "src"
        assert "built E_T" in stream.getvalue()
        assert "hidden" not in stream.getvalue()
        setup_logging("WARNING")
