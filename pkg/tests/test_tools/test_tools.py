"""
Tool Tests

Module: tests.test_tools.test_tools
Purpose: Every verb's tool interface, results and error payloads, and the registry
Status: Complete
Created: 2026-10-17

Tests cover:
- Tool interface (name, description, parameter schema)
- Results for valid inputs, including published values
- Missing and invalid inputs as error payloads
"""

import pytest

from src.tools.base import Tool
from src.tools.basis_tool import BasisTool
from src.tools.characteristic_map_tool import CharacteristicMapTool
from src.tools.dimension_tool import DimensionTool
from src.tools.idempotent_tool import IdempotentTool
from src.tools.schur_tool import DoubleSchurTool, SchurTool
from src.tools.tool_registry import ToolRegistry, default_registry


class TestToolInterface:
    """Test every tool conforms to the Tool interface"""

    @pytest.mark.parametrize("name", ["dims", "idempotent", "chmap", "schur", "double-schur", "verify", "basis"])
    def test_registered(self, name):
        """Test the verb is registered with a schema"""
        tool = default_registry().get(name)
        assert isinstance(tool, Tool)
        assert tool.name == name
        assert tool.description
        assert tool.parameters["type"] == "object"
        assert set(tool.parameters["required"]) <= set(tool.parameters["properties"])


class TestToolRegistry:
    """Test lookup by name"""

    def test_unknown_tool(self):
        """Test the error lists the known verbs"""
        with pytest.raises(KeyError, match="Must be one of"):
            default_registry().get("plot")

    def test_duplicate(self):
        """Test registering a verb twice"""
        registry = ToolRegistry([BasisTool()])
        with pytest.raises(ValueError, match="already registered"):
            registry.register(BasisTool())

    def test_contains(self):
        """Test membership and names"""
        registry = ToolRegistry([BasisTool(), SchurTool()])
        assert "schur" in registry
        assert registry.names() == ["basis", "schur"]


class TestDimensionTool:
    """Test the dims verb"""

    def test_symplectic_exterior_square(self):
        """Test Sp_4, λ = (1,1) gives 5"""
        result = DimensionTool().execute(group="sp", N=4, **{"lambda": "1,1"})
        assert result["success"] is True
        assert result["data"]["value"] == "5"
        assert result["error"] is None

    def test_orthogonal_reports_duality(self):
        """Test factors and the duality flag"""
        data = DimensionTool().execute(group="orthogonal", N=6, **{"lambda": "2"})["data"]
        assert data["factors"] == [8, 5]
        assert data["duality"] is True

    def test_trace(self):
        """Test tr E_T for Sp_4, λ = (1,1) is D(λ') = 10"""
        result = DimensionTool().execute(group="sp", N=4, trace=True, **{"lambda": "1,1"})
        assert result["data"]["trace"] == "10"

    def test_unknown_group(self):
        """Test the error names the accepted groups"""
        result = DimensionTool().execute(group="unitary", N=4, **{"lambda": "1"})
        assert result["success"] is False
        assert "Must be one of" in result["error"]

    def test_missing_lambda(self):
        """Test a missing partition"""
        result = DimensionTool().execute(group="gl", N=3)
        assert result["success"] is False
        assert "Missing required field" in result["error"]

    def test_shape_bound(self):
        """Test λ outside the bound"""
        result = DimensionTool().execute(group="o", N=4, **{"lambda": "1,1,1"})
        assert result["success"] is False
        assert "Validation error" in result["error"]


class TestIdempotentTool:
    """Test the idempotent verb"""

    def test_primitive(self):
        """Test E_T for the row tableau of (2) on O_4"""
        data = IdempotentTool().execute(group="orthogonal", N=4, **{"lambda": "2"})["data"]
        assert data["trace"] == "9"
        assert data["idempotent"] is True
        assert data["contents"] == ["3/2", "5/2"]
        assert data["dimension"] == 16

    def test_central(self):
        """Test tr φ_λ = dim λ"""
        data = IdempotentTool().execute(group="o", N=4, central=True, **{"lambda": "2,1"})["data"]
        assert data["operator"] == "central"
        assert data["trace"] == "2"

    def test_triples(self):
        """Test the sparse matrix is included on request"""
        data = IdempotentTool().execute(group="gl", N=2, triples=True, **{"lambda": "1"})["data"]
        assert data["matrix"]["entries"] == [[0, 0, "1"], [1, 1, "1"]]

    def test_tableau_index_range(self):
        """Test an index past the last tableau"""
        result = IdempotentTool().execute(group="o", N=4, tableau_index=2, **{"lambda": "2,1"})
        assert result["success"] is False
        assert "tableau_index" in result["error"]

    def test_size_guard(self):
        """Test the limit is enforced through the tool"""
        result = IdempotentTool().execute(group="o", N=4, max_dimension=10, **{"lambda": "2"})
        assert result["success"] is False
        assert "force-large" in result["error"]

    def test_empty_shape(self):
        """Test λ = ∅"""
        result = IdempotentTool().execute(group="o", N=4, **{"lambda": ""})
        assert result["success"] is False


class TestCharacteristicMapTool:
    """Test the chmap verb"""

    def test_two_two(self):
        """Test the O_6 image of φ_(2,2)"""
        data = CharacteristicMapTool().execute(group="orthogonal", N=6, **{"lambda": "2,2"})["data"]
        assert data["terms"] == [{"nu": [2], "coeff": "1/1680"}, {"nu": [1, 1], "coeff": "1/360"}]
        assert data["lambda"] == [2, 2]

    def test_oracle_agrees(self):
        """Test the explicit trace matches on O_4"""
        data = CharacteristicMapTool().execute(group="o", N=4, oracle=True, **{"lambda": "1,1"})["data"]
        assert data["oracle_agrees"] is True

    def test_symmetrizer(self):
        """Test the Sp_6 image of S^(2) is -1/3 s_(1)"""
        data = CharacteristicMapTool().execute(group="sp", N=6, symmetrizer=1)["data"]
        assert data["terms"] == [{"nu": [1], "coeff": "-1/3"}]

    def test_general_linear(self):
        """Test ch(χ_(2,1)) = s_(2,1) in three variables"""
        data = CharacteristicMapTool().execute(group="gl", N=3, **{"lambda": "2,1"})["data"]
        assert data["terms"] == [{"nu": [2, 1], "coeff": "1"}]
        assert (data["n"], data["lambda"]) == (3, [2, 1])

    def test_rank_mismatch(self):
        """Test n != floor(N/2)"""
        result = CharacteristicMapTool().execute(group="o", N=6, n=2, **{"lambda": "2"})
        assert result["success"] is False

    def test_empty_shape(self):
        """Test λ = ∅"""
        result = CharacteristicMapTool().execute(group="o", N=6, **{"lambda": "0"})
        assert "at least one box" in result["error"]

    def test_render(self):
        """Test one line per Schur term"""
        tool = CharacteristicMapTool()
        data = tool.execute(group="o", N=6, **{"lambda": "2,2"})["data"]
        assert tool.render(data).splitlines() == ["s[2  ]  1/1680", "s[1,1]  1/360"]


class TestSchurTools:
    """Test the schur and double-schur verbs"""

    def test_schur_dimension(self):
        """Test s_(2,1)(1,1,1) = 8 and a rational point"""
        data = SchurTool().execute(nu="2,1", n=3, point="1,2,1/2")["data"]
        assert data["dimension"] == "8"
        assert data["value"] == "45/4"

    def test_double_schur_at_rho(self):
        """Test s_(1)(a_(1) | a) = 3 for ε = 0, n = 2"""
        data = DoubleSchurTool().execute(nu="1", n=2, epsilon="0", rho="1")["data"]
        assert data["point"] == ["4", "0"]
        assert data["value"] == "3"
        assert data["contained"] is True

    def test_double_schur_vanishes(self):
        """Test s_(2)(a_(1,1) | a) = 0 since (2) ⊄ (1,1)"""
        data = DoubleSchurTool().execute(nu="2", group="o", N=5, rho="1,1")["data"]
        assert data["epsilon"] == "1/2"
        assert data["n"] == 2
        assert data["value"] == "0"
        assert data["contained"] is False

    def test_zero_sequence(self):
        """Test the vanishing sequence gives the ordinary Schur value"""
        data = DoubleSchurTool().execute(nu="1,1", n=2, zero_sequence=True, point="3,5")["data"]
        assert data["value"] == "15"
        assert data["epsilon"] == "zero"

    def test_double_schur_needs_epsilon(self):
        """Test neither ε nor a group"""
        result = DoubleSchurTool().execute(nu="1", n=2, rho="1")
        assert result["success"] is False
        assert "epsilon" in result["error"]

    def test_double_schur_rejects_general_linear(self):
        """Test ε is undefined for GL_N"""
        result = DoubleSchurTool().execute(nu="1", group="gl", N=3, rho="1")
        assert result["success"] is False


class TestBasisTool:
    """Test the basis verb"""

    def test_count(self):
        """Test (2·5 - 1)!! = 945"""
        assert BasisTool().execute(m=5)["data"]["count"] == 945

    def test_list(self):
        """Test the three diagrams of B_2"""
        data = BasisTool().execute(m=2, list=True)["data"]
        assert len(data["diagrams"]) == 3

    def test_list_limit(self):
        """Test listing large bases is refused"""
        result = BasisTool().execute(m=7, list=True)
        assert result["success"] is False

    def test_non_positive(self):
        """Test m = 0"""
        assert BasisTool().execute(m=0)["success"] is False
