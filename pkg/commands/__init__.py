# Command modules for specint; each exposes `async def setup(app)`
