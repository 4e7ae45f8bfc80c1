import asyncio

async def main():
    async with lock:
        await asyncio.sleep(1)
    async for x in gen():
        yield x
