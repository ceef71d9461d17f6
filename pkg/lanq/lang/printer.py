"""Pretty-printer for the concrete syntax tree."""

from lanq.lang import ast

INDENT = '    '


def format_type(type_expr):
    return str(type_expr)


def format_expr(expr):
    if isinstance(expr, ast.Var):
        return expr.name
    elif isinstance(expr, ast.IntLit):
        return str(expr.value)
    elif isinstance(expr, ast.BoolLit):
        return 'true' if expr.value else 'false'
    elif isinstance(expr, ast.Paren):
        return f'({format_expr(expr.expr)})'
    elif isinstance(expr, ast.BinOp):
        left = format_expr(expr.left)
        # Operators associate to the right, so a compound left operand needs brackets.
        if isinstance(expr.left, (ast.BinOp, ast.Assign)):
            left = f'({left})'
        return f'{left} {expr.op} {format_expr(expr.right)}'
    elif isinstance(expr, ast.Assign):
        return f'{expr.name} = {format_expr(expr.expr)}'
    elif isinstance(expr, ast.Call):
        return f"{expr.name}({', '.join(format_expr(arg) for arg in expr.args)})"
    elif isinstance(expr, ast.Recv):
        return f'recv({format_expr(expr.channel)})'
    elif isinstance(expr, ast.Measure):
        return f"measure({', '.join((expr.basis,) + expr.targets)})"
    elif isinstance(expr, ast.New):
        return f'new {format_type(expr.type)}()'
    raise TypeError(f"Cannot format {type(expr).__name__} as an expression.")


def format_declaration(decl):
    if isinstance(decl, ast.TypedDecl):
        return f"{format_type(decl.type)} {', '.join(decl.names)};"
    elif isinstance(decl, ast.ChannelDecl):
        return f'{format_type(decl.type)} {decl.name} withends [{decl.end0}, {decl.end1}];'
    elif isinstance(decl, ast.AliasDecl):
        return f"{decl.name} aliasfor [{', '.join(decl.parts)}];"
    raise TypeError(f"Cannot format {type(decl).__name__} as a declaration.")


def format_stmt(stmt, depth=0):
    """Format a statement or declaration as a list of indented lines."""
    pad = INDENT * depth
    if isinstance(stmt, ast.VarDeclaration):
        return [pad + format_declaration(stmt)]
    elif isinstance(stmt, ast.Skip):
        return [pad + ';']
    elif isinstance(stmt, ast.ExprStmt):
        return [pad + format_expr(stmt.expr) + ';']
    elif isinstance(stmt, ast.Block):
        lines = [pad + '{']
        for item in stmt.items:
            lines.extend(format_stmt(item, depth + 1))
        return lines + [pad + '}']
    elif isinstance(stmt, ast.If):
        lines = [pad + f'if ({format_expr(stmt.cond)})'] + format_stmt(stmt.then, depth + 1)
        if stmt.orelse is not None:
            lines += [pad + 'else'] + format_stmt(stmt.orelse, depth + 1)
        return lines
    elif isinstance(stmt, ast.While):
        return [pad + f'while ({format_expr(stmt.cond)})'] + format_stmt(stmt.body, depth + 1)
    elif isinstance(stmt, ast.Return):
        if stmt.expr is None:
            return [pad + 'return;']
        return [pad + f'return {format_expr(stmt.expr)};']
    elif isinstance(stmt, ast.Fork):
        return [pad + f'fork {format_expr(stmt.call)};']
    elif isinstance(stmt, ast.Send):
        return [pad + f'send({format_expr(stmt.channel)}, {format_expr(stmt.value)});']
    raise TypeError(f"Cannot format {type(stmt).__name__} as a statement.")


def format_method(method):
    header = method.header
    params = ', '.join(f'{format_type(param.type)} {param.name}' for param in header.params)
    lines = [f'{format_type(header.return_type)} {header.name}({params})']
    lines.extend(format_stmt(method.body))
    return '\n'.join(lines)


def format_program(program):
    """
    Render a SourceProgram back to LanQ source text.

    Parsing the result yields a tree equal to the one printed.
    """
    return '\n\n'.join(format_method(method) for method in program.methods) + '\n'
